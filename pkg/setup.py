"""Build script: compiles the optional Cython kernel extension.

If Cython (or a C compiler) is unavailable the build falls through to the
pure-Python kernels selected at import time in curvepoly.kernels.
"""
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
    import numpy

    ext_modules = cythonize(
        [
            Extension(
                "curvepoly._kernels_c",
                ["src/curvepoly/_kernels_c.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level="3",
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
