"""Build script: compiles the optional integer linear-algebra kernels.

The package is pure Python apart from ``innerforms._kernels``, a small
Cython extension accelerating exact integer matrix rank and products.
If Cython or a C compiler is unavailable the build falls back to a
pure-Python installation; ``innerforms.linalg`` selects the backend at
import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "innerforms._kernels",
                ["src/innerforms/_kernels.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"innerforms: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
