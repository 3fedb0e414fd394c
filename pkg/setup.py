"""Builds the optional compiled rewrite kernel.

If Cython or a C compiler is missing the package still installs and
``regsem.rewrite`` falls back to the pure-Python kernel.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    try:
        ext_modules = cythonize(
            [Extension("regsem._kernel", ["src/regsem/_kernel.pyx"], extra_compile_args=["-O3"], optional=True)],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # a broken toolchain should not block installation
        print(f"warning: not building the compiled kernel ({exc})")
        ext_modules = []

setup(ext_modules=ext_modules)
