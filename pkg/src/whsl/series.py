"""Dense power-series expansion of (1 - t^h) / ((1-t^a)(1-t^b)(1-t^c)).

This is the one hot numeric kernel in the package: the asymptotic degree
checks expand the series to N = 2000*abc terms (millions of coefficients
for the larger weight types).  The kernel has two interchangeable
implementations:

* a numba ``@njit`` loop (default when numba imports cleanly), and
* a pure-numpy fallback using per-residue cumulative sums.

Selection: set ``WHSL_KERNEL=numpy`` or ``WHSL_KERNEL=numba`` in the
environment; unset picks numba when available.  Both paths produce
bit-identical int64 arrays (see tests and benchmarks/bench_series.py).

int64 is exact here: every intermediate is a coefficient of
1/((1-t^a)(1-t^b)(1-t^c)), bounded by (n/a+1)(n/b+1) <= (n+1)^2, so
overflow needs n beyond 3e9.  A guard rejects such lengths outright.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["expand", "expand_numpy", "expand_numba", "active_backend"]

_MAX_TERMS = 1 << 31  # int64-exactness guard, far above practical use


def _check_args(a: int, b: int, c: int, h: int, n_terms: int) -> None:
    if min(a, b, c, h) < 1:
        raise ValueError(f"weights and degree must be positive, got {(a, b, c, h)}")
    if n_terms < 1:
        raise ValueError(f"n_terms must be >= 1, got {n_terms}")
    if n_terms > _MAX_TERMS:
        raise ValueError(f"series length {n_terms} exceeds int64-exact range")


def expand_numpy(a: int, b: int, c: int, h: int, n_terms: int) -> np.ndarray:
    """Pure-numpy path: each 1/(1-t^d) factor is a cumulative sum over the
    residue classes mod d; the (1 - t^h) numerator is a shifted subtraction.
    """
    _check_args(a, b, c, h, n_terms)
    out = np.zeros(n_terms, dtype=np.int64)
    out[0] = 1
    for d in (a, b, c):
        for r in range(min(d, n_terms)):
            seg = out[r::d]
            np.cumsum(seg, out=seg)
    if h < n_terms:
        out[h:] -= out[: n_terms - h].copy()
    return out


_njit_kernel = None


def _get_njit_kernel():
    global _njit_kernel
    if _njit_kernel is None:
        import numba

        @numba.njit(cache=True)
        def kernel(a, b, c, h, out):  # pragma: no cover - jitted
            n = out.shape[0]
            out[0] = 1
            for d in (a, b, c):
                for i in range(d, n):
                    out[i] += out[i - d]
            for i in range(n - 1, h - 1, -1):
                out[i] -= out[i - h]

        _njit_kernel = kernel
    return _njit_kernel


def expand_numba(a: int, b: int, c: int, h: int, n_terms: int) -> np.ndarray:
    """numba path: stride prefix sums in one jitted loop."""
    _check_args(a, b, c, h, n_terms)
    kernel = _get_njit_kernel()
    out = np.zeros(n_terms, dtype=np.int64)
    kernel(a, b, c, h, out)
    return out


def _resolve_backend() -> str:
    choice = os.environ.get("WHSL_KERNEL", "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise ValueError(f"WHSL_KERNEL must be 'numba' or 'numpy', got {choice!r}")
    if choice == "numpy":
        return "numpy"
    try:
        _get_njit_kernel()
        return "numba"
    except ImportError:
        if choice == "numba":
            raise
        return "numpy"


_BACKEND: str | None = None


def active_backend() -> str:
    """Which kernel ``expand`` dispatches to ('numba' or 'numpy')."""
    global _BACKEND
    if _BACKEND is None:
        _BACKEND = _resolve_backend()
    return _BACKEND


def expand(a: int, b: int, c: int, h: int, n_terms: int) -> np.ndarray:
    """Coefficients 0..n_terms-1 of (1-t^h)/((1-t^a)(1-t^b)(1-t^c))."""
    if active_backend() == "numba":
        return expand_numba(a, b, c, h, n_terms)
    return expand_numpy(a, b, c, h, n_terms)
