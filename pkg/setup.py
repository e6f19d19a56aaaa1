"""Build script: compiles the optional Cython hot kernel.

The package works without the extension (a numpy fallback is selected at
import time), so a failed compile must never break installation.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "resfm._kernels._hessian_cy",
                ["src/resfm/_kernels/_hessian_cy.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
    for ext in ext_modules:
        ext.optional = True
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
