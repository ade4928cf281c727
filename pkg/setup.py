# Builds the optional compiled kernels (digit-DFS p-adic zero search and the
# integer box search for quadratic points).  The package works without them;
# dp4.kernels falls back to the pure-Python implementations at import time.
#
# Build in place with:  python setup.py build_ext --inplace
import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("dp4._speedups", ["src/dp4/_speedups.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover
    sys.stderr.write("dp4: skipping compiled kernels (%s)\n" % exc)

setup(ext_modules=ext_modules)
