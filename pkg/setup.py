import os

from setuptools import Extension, setup

# The compiled kernels are an optimization, not a requirement: the package
# falls back to the pure-Python backend when the extension is absent.
# Set OVALCODES_PURE_PYTHON=1 to skip the build entirely.
ext_modules = []
if not os.environ.get("OVALCODES_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("ovalcodes._ckernels", ["src/ovalcodes/_ckernels.pyx"])],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )

setup(ext_modules=ext_modules)
