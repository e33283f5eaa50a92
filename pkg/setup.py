"""Build shim: compiles the optional Cython kernel (hebtok._core).

The package works without the extension (a pure-Python twin is selected at
import time); set HEBTOK_PURE_PYTHON=1 to skip the build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HEBTOK_PURE_PYTHON") != "1" and os.path.exists("src/hebtok/_core.pyx"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "hebtok._core",
                    ["src/hebtok/_core.pyx"],
                    language="c++",
                    optional=True,
                )
            ],
            language_level="3",
        )

setup(ext_modules=ext_modules)
