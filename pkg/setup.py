"""Build hook for the optional Cython scalar kernel.

The package is pure Python plus one accelerator extension
(``ncweil.scalars._speedups``).  If Cython or a C compiler is missing
the build falls back to the pure backend; nothing else changes.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("NCWEIL_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "ncweil.scalars._speedups",
                    ["src/ncweil/scalars/_speedups.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
