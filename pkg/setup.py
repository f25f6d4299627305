"""Build the optional Cython kernels.

The package works without them: ``harmonic_cert.kernels`` falls back to the
pure-Python implementations when the extension is missing.
"""
import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat compilation failures as non-fatal."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, Cython missing, ...
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        sys.stderr.write(f"warning: skipping compiled kernels ({exc}); "
                         "the pure-Python fallback will be used\n")


def extensions():
    if os.environ.get("HARMONIC_CERT_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "harmonic_cert._ckernels",
        ["src/harmonic_cert/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
