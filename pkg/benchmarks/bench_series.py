#!/usr/bin/env python3
"""Benchmark the two Hilbert-series kernels (numba @njit vs pure numpy).

The expansion to N = 2000*abc terms dominates the asymptotic-degree
checks, so this is the package's one hot loop.  Both kernels produce
bit-identical int64 arrays; this script times them side by side.

Run:  python benchmarks/bench_series.py
"""

from __future__ import annotations

import time

import numpy as np

from whsl import series

CASES = [
    # (a, b, c, h, n_terms)
    (1, 2, 3, 7, 100_000),
    (2, 3, 7, 14, 500_000),
    (8, 9, 12, 36, 1_728_000),   # N = 2000*abc for the p_g=1 boundary type
    (6, 22, 33, 66, 8_712_000),  # largest abc in the published tables
]

REPEATS = 5


def time_kernel(fn, args) -> float:
    best = float("inf")
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    # warm up the jit so compilation is not timed
    series.expand_numba(1, 2, 3, 7, 16)
    print(f"{'case':<24} {'n_terms':>10} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for a, b, c, h, n in CASES:
        args = (a, b, c, h, n)
        got_numba = series.expand_numba(*args)
        got_numpy = series.expand_numpy(*args)
        if not np.array_equal(got_numba, got_numpy):
            raise SystemExit(f"kernel mismatch for {args}")
        t_numba = time_kernel(series.expand_numba, args)
        t_numpy = time_kernel(series.expand_numpy, args)
        label = f"({a},{b},{c};{h})"
        print(
            f"{label:<24} {n:>10} {t_numba * 1e3:>8.2f}ms {t_numpy * 1e3:>8.2f}ms "
            f"{t_numpy / t_numba:>7.2f}x"
        )
    print(f"\nactive backend for whsl.series.expand: {series.active_backend()}")
    print("select with WHSL_KERNEL=numba|numpy")


if __name__ == "__main__":
    main()
