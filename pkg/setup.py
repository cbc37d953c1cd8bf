"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time); building it just makes `simulate` and the verification sweeps
fast. `optional=True` keeps installation alive on boxes without a C
toolchain.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "cellstage._kernels",
        ["src/cellstage/_kernels.pyx"],
        # -ffp-contract=off: no FMA contraction, so the compiled kernels are
        # bit-identical to the pure-Python fallback.
        extra_compile_args=["-O2", "-ffp-contract=off"],
        optional=True,
    )
]

setup(
    ext_modules=(
        cythonize(extensions, compiler_directives={"language_level": "3"})
        if cythonize is not None
        else []
    )
)
