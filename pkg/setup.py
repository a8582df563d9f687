"""Build the optional compiled kernel extension.

If Cython or a C toolchain is unavailable the package installs without
the extension and falls back to the numpy kernels at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("thetasweep._kernels", ["src/thetasweep/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
