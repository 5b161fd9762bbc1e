"""Builds the compiled scan kernel.

The package works without it (a pure-Python fallback is selected at import
time), but the compiled kernel is what makes million-hinge inputs instant.

    pip install -e . --no-build-isolation
or, to drop the .so next to the sources:
    python setup.py build_ext --inplace
"""

from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension("rulerwrap._scan_cy", ["src/rulerwrap/_scan_cy.pyx"]),
]

setup(ext_modules=cythonize(extensions, language_level="3"))
