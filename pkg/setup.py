from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # pure-Python fallback is selected at import time, so building
    # without Cython is fine
    extensions = []
else:
    extensions = cythonize(
        [Extension("filtrum.kernels._core", ["src/filtrum/kernels/_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
