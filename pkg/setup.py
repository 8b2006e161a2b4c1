import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("novikov._kernels._fast", ["src/novikov/_kernels/_fast.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pure-Python install still works
    print(f"skipping compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
