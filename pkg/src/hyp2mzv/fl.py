"""Fourier-Legendre toolkit on [0, 1].

Expansions are in shifted Legendre polynomials ``P_n(2x-1)``, with
``c_n = (2n+1) * int_0^1 f(x) P_n(2x-1) dx``.  Two paths are provided: an
mpmath path (lazy, cached coefficients) for digit-level checks and a float64
path for the long sums in the Parseval pairing.
"""
from __future__ import annotations

from fractions import Fraction

import mpmath
import numpy as np

from . import _kernels
from .ball import BigReal
from .poly import Poly, RationalFunction

__all__ = [
    "FLSeries", "shifted_legendre", "fl_coefficient", "fl_lift", "li1_series",
    "polylog_seed", "polylog_series", "polylog_coefficients_f64", "dixon_ratio",
    "dixon_coefficients", "parseval_check", "orthogonality_error", "even_fold",
]


def shifted_legendre(n: int, x):
    return mpmath.legendre(n, 2 * mpmath.mpf(x) - 1)


class FLSeries:
    """Coefficients ``c_n`` computed on demand and cached.

    ``value_at_zero`` is f(0) when known; since ``P_n(-1) = (-1)^n`` it turns
    the alternating tails used by :func:`fl_lift` into finite sums.
    """

    def __init__(self, coef, tag: str = "", value_at_zero=None, func=None):
        self._coef = coef
        self._cache: dict = {}
        self.tag = tag
        self.value_at_zero = value_at_zero
        self.func = func

    def __getitem__(self, n: int):
        if n < 0:
            raise IndexError(n)
        key = (n, mpmath.mp.prec)
        if key not in self._cache:
            self._cache[key] = mpmath.mpf(self._coef(n))
        return self._cache[key]

    def coefficients(self, n_max: int) -> list:
        return [self[n] for n in range(n_max + 1)]

    def partial(self, x, n_terms: int):
        t = 2 * mpmath.mpf(x) - 1
        return mpmath.fsum(self[n] * mpmath.legendre(n, t) for n in range(n_terms))

    def __repr__(self):
        return f"FLSeries({self.tag!r})"


def fl_coefficient(f, n: int):
    """``(2n+1) int_0^1 f(x) P_n(2x-1) dx`` by tanh-sinh quadrature."""
    pts = mpmath.linspace(0, 1, max(2, n // 4 + 2))
    val = mpmath.quad(lambda x: f(x) * mpmath.legendre(n, 2 * x - 1), pts)
    return (2 * n + 1) * val


def fl_lift(f: FLSeries, boundary, tag: str = "") -> FLSeries:
    """Coefficients of ``F(x) = int_0^x f(t)/t dt`` given ``boundary = int_0^1 f(t)(1-t)/t dt``.

    For n >= 1, ``F_n = (-1)^n (1/n + 1/(n+1)) sum_{k>=n} (-1)^k c_k - c_n/(n+1)``.
    """
    boundary = boundary.mid if isinstance(boundary, BigReal) else mpmath.mpf(boundary)
    heads: list = [mpmath.mpf(0)]

    def head(n):
        # sum_{k<n} (-1)^k c_k
        while len(heads) <= n:
            k = len(heads) - 1
            heads.append(heads[-1] + (-1) ** k * f[k])
        return heads[n]

    def tail(n):
        if f.value_at_zero is not None:
            return mpmath.mpf(f.value_at_zero) - head(n)
        val = mpmath.nsum(lambda k: (-1) ** int(k) * f[int(k)], [n, mpmath.inf])
        if not mpmath.isfinite(val):
            raise ValueError(f"alternating tail of {f.tag} does not converge")
        return val

    def coef(n):
        if n == 0:
            return boundary
        return (-1) ** n * (mpmath.mpf(1) / n + mpmath.mpf(1) / (n + 1)) * tail(n) - f[n] / (n + 1)

    return FLSeries(coef, tag or f"lift({f.tag})", value_at_zero=0)


def li1_series() -> FLSeries:
    """-log(1-x): c_0 = 1, c_n = (2n+1)/(n(n+1))."""
    return FLSeries(lambda n: mpmath.mpf(1) if n == 0 else mpmath.mpf(2 * n + 1) / (n * (n + 1)),
                    "Li1", value_at_zero=0, func=lambda x: -mpmath.log(1 - x))


def _li_c0(s: int):
    # int_0^1 Li_s = sum_{j=2}^{s} (-1)^(s-j) zeta(j) + (-1)^(s-1)
    out = mpmath.mpf((-1) ** (s - 1))
    for j in range(2, s + 1):
        out += (-1) ** (s - j) * mpmath.zeta(j)
    return out


def polylog_seed(s: int) -> FLSeries:
    """Li_s with every coefficient from quadrature."""
    func = (lambda x: mpmath.polylog(s, x))
    return FLSeries(lambda n: fl_coefficient(func, n), f"Li{s}", value_at_zero=0, func=func)


def polylog_series(s: int, seed: int = 3) -> FLSeries:
    """Li_s obtained by lifting the quadrature seed ``Li_seed`` (``s >= seed``)."""
    if s < seed:
        raise ValueError("s must be at least the seed order")
    f = polylog_seed(seed) if seed > 1 else li1_series()
    for r in range(seed, s):
        # int_0^1 Li_r(t)(1-t)/t dt = zeta(r+1) - int_0^1 Li_r
        f = fl_lift(f, mpmath.zeta(r + 1) - _li_c0(r), f"Li{r + 1}")
    return f


def polylog_coefficients_f64(s: int, n_max: int) -> np.ndarray:
    """c_0..c_n_max of Li_s in float64, lifted from the closed form of Li_1."""
    n = np.arange(n_max + 1, dtype=np.float64)
    c = np.empty(n_max + 1)
    c[0] = 1.0
    c[1:] = (2 * n[1:] + 1) / (n[1:] * (n[1:] + 1))
    for r in range(1, s):
        nxt = _kernels.fl_lift_f64(c, 0.0)
        nxt[0] = float(mpmath.zeta(r + 1) - _li_c0(r))
        c = nxt
    return c


# ---------------------------------------------------------------------------
# weights (x(1-x))^(s-1)

def dixon_ratio(s, n: int) -> Fraction:
    """Exact ``(5/4)_n (1-s)_n (1/2)_n / ((1/4)_n (1/2+s)_n n!)``."""
    s = Fraction(s)
    r = Fraction(1)
    for i in range(n):
        r *= (Fraction(5, 4) + i) * (1 - s + i) * (Fraction(1, 2) + i)
        r /= (Fraction(1, 4) + i) * (Fraction(1, 2) + s + i) * (1 + i)
    return r


def dixon_coefficients(s, n_max: int) -> FLSeries:
    """FL series of ``(x(1-x))^(s-1)``: only even indices are nonzero."""
    s = Fraction(s)
    if s <= 0:
        raise ValueError("s must be positive")
    sm = mpmath.mpf(s.numerator) / s.denominator
    ratios = [Fraction(1)]
    for i in range(n_max):
        prev = ratios[-1]
        ratios.append(prev * (Fraction(5, 4) + i) * (1 - s + i) * (Fraction(1, 2) + i)
                      / ((Fraction(1, 4) + i) * (Fraction(1, 2) + s + i) * (1 + i)))

    def coef(n):
        if n % 2 or n // 2 > n_max:
            return mpmath.mpf(0)
        r = ratios[n // 2]
        return mpmath.beta(sm, sm) * mpmath.mpf(r.numerator) / r.denominator

    return FLSeries(coef, f"(x(1-x))^({s}-1)", func=lambda x: (x * (1 - x)) ** (sm - 1))


# ---------------------------------------------------------------------------
# checks

def _weighted_li5_integral(digits: int):
    """(1/B(3/4,3/4)) int_0^1 Li_5(x) (x(1-x))^(-1/4) dx, with x = sin^2(theta)."""
    with mpmath.workdps(digits + 10):
        def g(th):
            sn, cs = mpmath.sin(th), mpmath.cos(th)
            return mpmath.polylog(5, sn * sn) * 2 * mpmath.sqrt(sn * cs)
        val = mpmath.quad(g, [0, mpmath.pi / 4, mpmath.pi / 2])
        return val / mpmath.beta(0.75, 0.75)


def parseval_check(digits: int = 20, n_terms: int = 10 ** 4, with_constant: bool = True) -> BigReal:
    """``|LHS - RHS|`` of the Parseval pairing of Li_5 with ``(x(1-x))^(-1/4)``.

    The radius carries the float64 rounding bound and the power-law tail
    estimate of the truncated coefficient sum.
    """
    lhs = _weighted_li5_integral(digits)
    c = polylog_coefficients_f64(5, 2 * n_terms)
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    a = np.cumprod((2 * n - 1) / (2 * n))  # binom(2n, n)/4^n
    terms = a * c[2::2][:n_terms] / (4 * n + 1)
    total = float(np.sum(terms))
    # tail: fit |t_n| ~ C n^-p on the last decade
    lo, hi = n_terms // 10, n_terms
    t_lo, t_hi = abs(terms[lo - 1]), abs(terms[hi - 1])
    tail = 0.0
    if t_lo > 0 and t_hi > 0:
        p = np.log(t_lo / t_hi) / np.log(hi / lo)
        if p > 1:
            tail = t_hi * hi / (p - 1)
    const = 1 - mpmath.zeta(2) + mpmath.zeta(3) - mpmath.zeta(4) + mpmath.zeta(5)
    rhs = mpmath.mpf(total) + (const if with_constant else 0)
    rounding = 1e-15 * n_terms
    return BigReal(abs(lhs - rhs), mpmath.mpf(tail + rounding))


def orthogonality_error(n_max: int = 20, nodes: int = 64) -> float:
    """max over i, j <= n_max of ``|int P_i P_j - delta_ij/(2i+1)|`` (Gauss-Legendre)."""
    xg, wg = np.polynomial.legendre.leggauss(nodes)
    x = (xg + 1) / 2
    w = wg / 2
    P = _kernels.legendre_table(n_max, x)
    G = (P * w) @ P.T
    target = np.diag(1.0 / (2 * np.arange(n_max + 1) + 1))
    return float(np.max(np.abs(G - target)))


def even_fold(R: RationalFunction) -> RationalFunction:
    """``R(2n) / (4n+1)``: what a coefficient factor becomes on the even-index Parseval sum."""
    n2 = Poly([0, 2])
    return RationalFunction(_compose(R.num, n2), _compose(R.den, n2) * Poly([1, 4]))


def _compose(p: Poly, q: Poly) -> Poly:
    out = Poly([0])
    for c in reversed(p.c):
        out = out * q + Poly([c])
    return out
