"""float64 inner loops, compiled with numba when available.

Set ``HYP2MZV_NO_NUMBA=1`` to force the numpy versions (same results up to
rounding).  Only bulk float work lives here; certified arithmetic stays in
mpmath.
"""
from __future__ import annotations

import os

import numpy as np

__all__ = ["USE_NUMBA", "legendre_table", "fl_lift_f64", "nested_sum_f64", "backend"]


def _want_numba() -> bool:
    if os.environ.get("HYP2MZV_NO_NUMBA", "").strip() not in ("", "0"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


USE_NUMBA = _want_numba()


# ---------------------------------------------------------------------------
# numpy versions


def _legendre_table_np(n_max, x):
    """P_n(2x-1) for n = 0..n_max, rows indexed by n."""
    t = 2.0 * np.asarray(x, dtype=np.float64) - 1.0
    out = np.empty((n_max + 1, t.size))
    out[0] = 1.0
    if n_max >= 1:
        out[1] = t
    for n in range(1, n_max):
        out[n + 1] = ((2 * n + 1) * t * out[n] - n * out[n - 1]) / (n + 1)
    return out


def _fl_lift_np(c, f0):
    n = np.arange(c.size, dtype=np.float64)
    sgn = np.where(np.arange(c.size) % 2 == 0, 1.0, -1.0)
    head = np.concatenate(([0.0], np.cumsum(sgn * c)[:-1]))
    tail = f0 - head
    out = np.zeros_like(c)
    k = n[1:]
    out[1:] = sgn[1:] * (1.0 / k + 1.0 / (k + 1.0)) * tail[1:] - c[1:] / (k + 1.0)
    return out


def _nested_sum_np(s, eps, N):
    # running sum over n_depth < ... < n_1 <= N, innermost first
    n = np.arange(1, N + 1, dtype=np.float64)
    acc = np.ones(N)
    for i in range(len(s) - 1, -1, -1):
        term = acc * (eps[i] ** np.arange(1, N + 1)) / n ** s[i]
        if i == 0:
            return float(term.sum())
        acc = np.concatenate(([0.0], np.cumsum(term)[:-1]))
    return 0.0


# ---------------------------------------------------------------------------
# numba versions

if USE_NUMBA:
    from numba import njit

    @njit(cache=True)
    def _legendre_table_nb(n_max, x):
        m = x.size
        out = np.empty((n_max + 1, m))
        for i in range(m):
            t = 2.0 * x[i] - 1.0
            out[0, i] = 1.0
            if n_max >= 1:
                out[1, i] = t
            for n in range(1, n_max):
                out[n + 1, i] = ((2 * n + 1) * t * out[n, i] - n * out[n - 1, i]) / (n + 1)
        return out

    @njit(cache=True)
    def _fl_lift_nb(c, f0):
        out = np.zeros_like(c)
        head = 0.0
        sgn = 1.0
        for n in range(c.size):
            if n >= 1:
                out[n] = sgn * (1.0 / n + 1.0 / (n + 1.0)) * (f0 - head) - c[n] / (n + 1.0)
            head += sgn * c[n]
            sgn = -sgn
        return out

    @njit(cache=True)
    def _nested_sum_nb(s, eps, N):
        depth = s.size
        acc = np.ones(N + 1)
        acc[0] = 0.0
        total = 0.0
        for i in range(depth - 1, -1, -1):
            new = np.zeros(N + 1)
            run = 0.0
            p = 1.0
            for n in range(1, N + 1):
                p *= eps[i]
                term = acc[n] * p / float(n) ** s[i]
                if i == 0:
                    total += term
                # strictly smaller index for the next (outer) level
                new[n] = run
                run += term
            acc = new
        return total


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def legendre_table(n_max: int, x) -> np.ndarray:
    x = np.ascontiguousarray(np.atleast_1d(np.asarray(x, dtype=np.float64)))
    if USE_NUMBA:
        return _legendre_table_nb(int(n_max), x)
    return _legendre_table_np(int(n_max), x)


def fl_lift_f64(c, f0: float = 0.0) -> np.ndarray:
    """Index n >= 1 part of the lifted coefficients; entry 0 is left at zero."""
    c = np.ascontiguousarray(np.asarray(c, dtype=np.float64))
    if USE_NUMBA:
        return _fl_lift_nb(c, float(f0))
    return _fl_lift_np(c, float(f0))


def nested_sum_f64(s, eps, N: int) -> float:
    """Truncated sum over N >= n_1 > n_2 > ... >= 1 of prod eps_i^n_i / n_i^s_i."""
    s = np.ascontiguousarray(np.asarray(s, dtype=np.float64))
    eps = np.ascontiguousarray(np.asarray(eps, dtype=np.float64))
    if USE_NUMBA:
        return float(_nested_sum_nb(s, eps, int(N)))
    return _nested_sum_np(s, eps, int(N))
