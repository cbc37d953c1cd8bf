#!/usr/bin/env python3
"""Benchmark the compiled kernels against their pure-Python twins.

Usage:
    python benchmarks/bench_kernels.py [--steps N] [--points N] [--repeat N]

Runs the RK4 stage integration and the closed-form residual sweep through
both backends (when the extension is built) and reports best-of-N wall
times plus the speedup. Results are also sanity-checked for bit equality,
since the CSV fixtures depend on the backends agreeing exactly.
"""

import argparse
import sys
import timeit
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cellstage import _kernels_py  # noqa: E402

try:
    from cellstage import _kernels
except ImportError:
    _kernels = None


def bench(label, make_call, backends, repeat):
    print(f"\n{label}")
    baseline = None
    for name, module in backends:
        call = make_call(module)
        best = min(timeit.repeat(call, number=1, repeat=repeat))
        if baseline is None:
            baseline = best
            print(f"  {name:10s} {best * 1e3:9.2f} ms")
        else:
            print(f"  {name:10s} {best * 1e3:9.2f} ms   ({baseline / best:.1f}x speedup)")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=200_000, help="RK4 steps")
    parser.add_argument("--points", type=int, default=1_000_000, help="grid points")
    parser.add_argument("--repeat", type=int, default=5, help="timing repeats")
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("compiled", _kernels))
        rk4_args = (1.0, 0.5, 0.3, -0.2, 0.0, 0.0, 1.0, -0.5, 1e-4, 10_000)
        sweep_args = (1.0, 0.5, 1.0, -0.5, 0.0, 10.0, 100_001)
        assert _kernels.rk4_stage_path(*rk4_args) == _kernels_py.rk4_stage_path(
            *rk4_args
        ), "backends disagree on RK4 output"
        assert _kernels.homogeneous_residual_maxnorm(
            *sweep_args
        ) == _kernels_py.homogeneous_residual_maxnorm(
            *sweep_args
        ), "backends disagree on residual sweep"
        print("backends agree bit-for-bit on the check cases")
    else:
        print("compiled extension not built; timing the pure-Python backend only")
        print("(build it with: python setup.py build_ext --inplace)")

    bench(
        f"rk4_stage_path, {args.steps} steps",
        lambda module: lambda: module.rk4_stage_path(
            1.0, 0.5, 0.3, -0.2, 0.0, 0.0, 1.0, -0.5, 1e-4, args.steps
        ),
        backends,
        args.repeat,
    )
    bench(
        f"homogeneous_residual_maxnorm, {args.points} points",
        lambda module: lambda: module.homogeneous_residual_maxnorm(
            1.0, 0.5, 1.0, -0.5, 0.0, 10.0, args.points
        ),
        backends,
        args.repeat,
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
