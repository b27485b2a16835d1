"""Build script for the optional compiled evaluation kernel.

The package works without the extension: htcraig.semantics falls back to
the pure-Python kernel when htcraig._core is not importable.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("htcraig._core", ["src/htcraig/_core.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
