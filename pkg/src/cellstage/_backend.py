"""Kernel backend selection.

Prefers the compiled extension, falls back to the pure-Python twins. Both
expose the same functions with bit-identical results; the compiled path is
just fast. benchmarks/bench_kernels.py measures the gap.
"""

try:
    from . import _kernels as _impl
except ImportError:  # extension not built on this box
    from . import _kernels_py as _impl

BACKEND = _impl.BACKEND_NAME
OVERFLOW_LIMIT = _impl.OVERFLOW_LIMIT

rk4_stage_path = _impl.rk4_stage_path
homogeneous_residual_maxnorm = _impl.homogeneous_residual_maxnorm


def kernel_backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return BACKEND
