"""Build the optional Cython kernels for exponential-polynomial arithmetic.

The package works without them: ``jacobikit.scalar._backend`` falls back to
the pure-Python kernels when the extension is missing.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("JACOBIKIT_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            ["src/jacobikit/scalar/_ckernels.pyx"],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
            quiet=True,
        )

setup(ext_modules=ext_modules)
