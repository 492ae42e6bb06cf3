"""Benchmark the numba kernels against the pure-numpy fallback.

Times the pairwise-distance, Gram, and smoothed-objective kernels over a
grid of code sizes, then one end-to-end optimizer run.  Run as:

    python benchmarks/bench_kernels.py

The active backend for library calls follows STIEFEL_NUMBA; this script
calls both implementations explicitly, so one invocation covers both.
"""

import time

import numpy as np

from stiefelcodes import Field, OptimizerConfig, optimize
from stiefelcodes import _kernels

SIZES = [
    (6, 2, 1),
    (16, 4, 2),
    (64, 8, 4),
    (176, 11, 8),
]


def timeit(fn, *args, repeat=5, number=20):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for _ in range(number):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / number)
    return best


def main():
    if not _kernels.HAVE_NUMBA:
        print("numba is not installed; nothing to compare")
        return
    rng = np.random.default_rng(0)
    print(f"{'kernel':<24} {'(n,d,r)':<14} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    pairs = [
        ("pairwise_sq_dists", _kernels.pairwise_sq_dists_numpy, _kernels.pairwise_sq_dists_numba),
        ("gram_real_trace", _kernels.gram_real_trace_numpy, _kernels.gram_real_trace_numba),
    ]
    for n, d, r in SIZES:
        mats = np.ascontiguousarray(
            rng.standard_normal((n, d, r)) + 1j * rng.standard_normal((n, d, r))
        )
        shape = f"({n},{d},{r})"
        for name, f_np, f_nb in pairs:
            f_nb(mats)  # compile outside the timer
            t_np = timeit(f_np, mats)
            t_nb = timeit(f_nb, mats)
            print(f"{name:<24} {shape:<14} {t_np*1e6:>8.1f}us {t_nb*1e6:>8.1f}us {t_np/t_nb:>7.1f}x")
        _kernels.softmin_value_grad_numba(mats, 8.0)
        t_np = timeit(_kernels.softmin_value_grad_numpy, mats, 8.0)
        t_nb = timeit(_kernels.softmin_value_grad_numba, mats, 8.0)
        name = "softmin_value_grad"
        print(f"{name:<24} {shape:<14} {t_np*1e6:>8.1f}us {t_nb*1e6:>8.1f}us {t_np/t_nb:>7.1f}x")

    print()
    config = OptimizerConfig(restarts=4, max_iters=500)
    for label, module_fns in (
        ("numba", (_kernels.pairwise_sq_dists_numba, _kernels.softmin_value_numba, _kernels.softmin_value_grad_numba)),
        ("numpy", (_kernels.pairwise_sq_dists_numpy, _kernels.softmin_value_numpy, _kernels.softmin_value_grad_numpy)),
    ):
        saved = (_kernels.pairwise_sq_dists, _kernels.softmin_value, _kernels.softmin_value_grad)
        _kernels.pairwise_sq_dists, _kernels.softmin_value, _kernels.softmin_value_grad = module_fns
        try:
            t0 = time.perf_counter()
            _, report = optimize(Field.REAL, 4, 2, 6, config=config)
            elapsed = time.perf_counter() - t0
        finally:
            _kernels.pairwise_sq_dists, _kernels.softmin_value, _kernels.softmin_value_grad = saved
        print(f"optimize(R,4,2,6) {label:<6} backend: {elapsed:6.2f}s  (min distance {report.min_distance:.6f})")


if __name__ == "__main__":
    main()
