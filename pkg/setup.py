import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    USE_CYTHON = True
except ImportError:
    USE_CYTHON = False

EXT_NAME = "squeezed_otto._propagate"
SOURCE = os.path.join("src", "squeezed_otto", "_propagate")

extensions = []
if USE_CYTHON and not os.environ.get("SQUEEZED_OTTO_NO_EXT"):
    extensions = cythonize(
        [Extension(EXT_NAME, [SOURCE + ".pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
