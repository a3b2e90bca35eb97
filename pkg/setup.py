import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "mlbiv._kernels_c",
                sources=["src/mlbiv/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
                include_dirs=[numpy.get_include()],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython: install the pure-Python package; the numpy fallback
    # backend is selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
