import os

from setuptools import setup

ext_modules = []
if os.environ.get("FPDEC_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/fpdec/kernels/_ckernel.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # pure-Python fallback is selected at import time
        pass

setup(ext_modules=ext_modules)
