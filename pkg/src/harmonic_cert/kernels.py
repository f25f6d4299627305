"""Hot-loop kernels, compiled when available.

``BACKEND`` is ``"cython"`` when the extension imported and ``"python"``
otherwise. Setting ``HARMONIC_CERT_PURE_PYTHON=1`` forces the fallback.
"""
import os

from harmonic_cert import _pykernels as python_kernels

compiled_kernels = None
if not os.environ.get("HARMONIC_CERT_PURE_PYTHON"):
    try:
        from harmonic_cert import _ckernels as compiled_kernels
    except ImportError:
        compiled_kernels = None

_impl = compiled_kernels if compiled_kernels is not None else python_kernels
BACKEND = "cython" if compiled_kernels is not None else "python"

LIMB_BITS = 64
naive_float_sum = _impl.naive_float_sum
harmonic_fixed_point = _impl.harmonic_fixed_point
