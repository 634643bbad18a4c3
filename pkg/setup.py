"""Builds the optional compiled search kernels.

The extension is marked optional: if no C compiler is available the install
still succeeds and the package falls back to the pure-Python kernels at
import time (see starsat._kernels).
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext = Extension(
        "starsat._kernels._cykernels",
        ["src/starsat/_kernels/_cykernels.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    )
    ext_modules = cythonize([ext], language_level=3)

setup(ext_modules=ext_modules)
