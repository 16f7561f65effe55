"""Build script: compiles the optional speedup kernels with Cython.

The package works without the compiled extension (a pure-Python fallback is
selected at import time), so the extension is marked optional and any build
failure is tolerated.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "ppbij.kernels._speed",
                ["src/ppbij/kernels/_speed.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
