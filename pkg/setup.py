import os

from setuptools import Extension, setup

# OHASH_NO_EXT=1 skips the compiled kernels; the package then runs on the
# pure-Python fallback selected at import time.
ext_modules = []
if not os.environ.get("OHASH_NO_EXT"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ohash._ckernels",
                ["src/ohash/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
