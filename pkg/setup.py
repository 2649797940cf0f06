import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/pentr/_core.pyx"],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )
except ImportError:
    # Pure-Python install; pentr.kernels falls back to the numpy backend.
    print("pentr: Cython not available, skipping compiled kernels", file=sys.stderr)

setup(ext_modules=ext_modules)
