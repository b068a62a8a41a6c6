"""Build script for the optional compiled kernel core.

The extension accelerates the scalar elliptic kernels (AGM, Carlson forms,
Jacobi functions) that dominate the adaptive-quadrature paths.  The package
works without it: confstrings._kernels falls back to the pure-numpy backend
at import time.  Set CONFSTRINGS_NO_EXT=1 to skip compilation entirely.
"""
import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("CONFSTRINGS_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "confstrings._kernels._core",
        ["src/confstrings/_kernels/_core.pyx"],
        extra_compile_args=["-O2"],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions())
