import os

import numpy
from setuptools import Extension, setup

# SCATLIB_NO_EXT=1 skips the compiled kernels; the package then runs on
# the pure-Python fallback.
ext_modules = []
if not os.environ.get("SCATLIB_NO_EXT"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "scatlib._ckernels",
                ["src/scatlib/_ckernels.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
