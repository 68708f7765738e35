"""Build script: compiles the lattice-summation core when a C toolchain is
available and falls back to the pure-numpy implementation otherwise."""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "curvekernel._latsum",
                ["src/curvekernel/_latsum.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
