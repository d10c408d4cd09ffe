import os

from setuptools import setup

# The compiled kernels are an optional speedup: if Cython (or a C compiler)
# is unavailable the package falls back to the pure-numpy implementation
# selected at import time in qlmd.backend.
ext_modules = []
if os.environ.get("QLMD_SKIP_EXTENSION") != "1":
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools.extension import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "qlmd._corecy",
                    ["src/qlmd/_corecy.pyx"],
                    include_dirs=[numpy.get_include()],
                    # -ffp-contract=off keeps float operation order identical to
                    # the numpy fallback so both backends are bit-reproducible.
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
