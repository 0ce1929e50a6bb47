import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None and not os.environ.get("LATTICEPATHS_SKIP_EXT"):
    extensions = cythonize(
        [
            Extension(
                "latticepaths._fastpaths",
                ["src/latticepaths/_fastpaths.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
