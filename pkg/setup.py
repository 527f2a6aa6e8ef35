"""Build script: compiles the optional Cython kernel core.

The package works without the extension (a pure-Python/numpy twin is
selected at import time), so a missing compiler or Cython only costs
speed, not functionality.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "teleportlab._ckernels",
                ["src/teleportlab/_ckernels.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
