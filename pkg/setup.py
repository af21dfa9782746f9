"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-Python fallback is selected at
import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "matchperm._kernels._core",
                ["src/matchperm/_kernels/_core.pyx"],
            )
        ],
        language_level=3,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
