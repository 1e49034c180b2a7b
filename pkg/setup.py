"""Build script for the compiled correlation kernel.

The package works without the extension (a numpy/scipy fallback is picked
at import time); set SEASOUNDER_PURE=1 to skip the build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SEASOUNDER_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "seasounder._kernels._xcorr",
                    ["src/seasounder/_kernels/_xcorr.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
