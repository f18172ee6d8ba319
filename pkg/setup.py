"""Build hook for the optional compiled kernels.

The package works without the extension; if Cython or a C compiler is
missing, the pure-Python kernels are used instead.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("nscatalan._kernels", ["src/nscatalan/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"nscatalan: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
