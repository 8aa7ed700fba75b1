import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "nonlocalheat._kernels",
                ["src/nonlocalheat/_kernels.pyx"],
                include_dirs=[np.get_include()],
            )
        ],
        language_level=3,
    )
else:
    # Pure-Python install; nonlocalheat.kernels falls back to the NumPy
    # implementations at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
