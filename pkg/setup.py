import os

from setuptools import setup
from setuptools.extension import Extension

ext_modules = []
if not os.environ.get("NSK_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("nsk._core", ["src/nsk/_core.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
