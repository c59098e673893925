"""Build script: compiles the optional _speedups extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a failed compile only costs speed.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/solnorm/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
