from setuptools import setup, Extension

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("spinalg._kernels._fast", ["src/spinalg/_kernels/_fast.pyx"])],
        language_level=3,
    )
except ImportError:
    # Pure-Python kernels are selected at import time when the extension
    # is unavailable, so the build must not hard-require Cython.
    ext_modules = []

setup(ext_modules=ext_modules)
