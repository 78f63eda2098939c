"""Builds the optional Cython kernels; the package runs without them."""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("CREMMER_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("cremmer._ckernels", ["src/cremmer/_ckernels.pyx"], optional=True)],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
