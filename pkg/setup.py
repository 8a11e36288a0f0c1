"""Build script: compiles the optional native kernel extension.

The package is fully functional without the extension; ``clusiam._kernels``
falls back to its numpy implementation when the compiled module is missing,
so a failed compile only costs speed, never correctness.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "clusiam._kernels._native",
                sources=["src/clusiam/_kernels/_native.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
