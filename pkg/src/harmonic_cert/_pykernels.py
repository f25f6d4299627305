"""Pure-Python versions of the hot loops in ``_ckernels.pyx``.

Both modules expose the same functions with the same results; the compiled
one is preferred by :mod:`harmonic_cert.kernels` when it imports.
"""

LIMB_BITS = 64


def naive_float_sum(n):
    """Left-to-right double precision sum of 1/r for r = 1..n."""
    s = 0.0
    for r in range(1, n + 1):
        s += 1.0 / r
    return s


def harmonic_fixed_point(n, limbs):
    """Return ``sum(floor(2**P / r) for r in 1..n)`` with ``P = 64 * limbs``.

    Every summand is rounded down by less than one unit, so
    ``S / 2**P <= H_n < (S + n) / 2**P``.
    """
    if n < 0 or limbs < 1:
        raise ValueError("n must be >= 0 and limbs >= 1")
    scale = 1 << (LIMB_BITS * limbs)
    return sum(scale // r for r in range(1, n + 1))
