"""Build shim: compiles the optional word-arithmetic speedup extension.

The package is fully functional without the extension (a pure-Python
kernel with identical semantics is selected at import time), so a failed
Cython build is not fatal for source installs.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(["src/af2/_speedups.pyx"], language_level=3)
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
