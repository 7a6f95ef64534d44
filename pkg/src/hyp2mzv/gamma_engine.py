"""Exact polygamma values, Beta-function log-moments and the k=1 base sums.

Everything here is symbolic: results are ClosedForms over
{gammaE, log2, pi, zeta, beta, sqrt2, sqrtpi, gamma14}.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

from .core import (
    EULER_GAMMA, GAMMA14, LOG2, PI, SQRT2, SQRTPI, ClosedForm, beta, mono, zeta,
)
from .errors import DivergentError, PoleError

__all__ = ["polygamma", "gamma_value", "beta_function", "beta_log_moment", "base_sum_k1",
           "certify_polygamma_table"]

_ADMISSIBLE_DEN = (1, 2, 4)


def _check_den(x: Fraction):
    if x.denominator not in _ADMISSIBLE_DEN:
        raise ValueError(f"argument {x} has denominator outside {{1,2,4}}")


def _hurwitz_at(s: int, x0: Fraction) -> ClosedForm:
    """zeta(s, x0) for x0 in {1/4, 1/2, 3/4, 1} and s >= 2."""
    z = ClosedForm.atom(zeta(s))
    if x0 == 1:
        return z
    if x0 == Fraction(1, 2):
        return z.scale(2 ** s - 1)
    sign = 1 if x0 == Fraction(1, 4) else -1
    half = Fraction(4 ** s, 2)
    return z.scale(half * (1 - Fraction(1, 2 ** s))) + ClosedForm.atom(beta(s)).scale(sign * half)


_DIGAMMA = {
    Fraction(1): ClosedForm.atom(EULER_GAMMA, coeff=-1),
    Fraction(1, 2): ClosedForm({mono(EULER_GAMMA): -1, mono(LOG2): -2}),
    Fraction(1, 4): ClosedForm({mono(EULER_GAMMA): -1, mono(PI): Fraction(-1, 2), mono(LOG2): -3}),
    Fraction(3, 4): ClosedForm({mono(EULER_GAMMA): -1, mono(PI): Fraction(1, 2), mono(LOG2): -3}),
}

_certified = False
_cert_lock = threading.Lock()


def _polygamma_base(j: int, x0: Fraction) -> ClosedForm:
    if j == 0:
        return _DIGAMMA[x0]
    return _hurwitz_at(j + 1, x0).scale((-1) ** (j + 1) * factorial(j)).canonical()


def polygamma(j: int, x) -> ClosedForm:
    """psi^(j)(x) exactly, for rational x with denominator 1, 2 or 4."""
    if not _certified:
        certify_polygamma_table()
    x = Fraction(x)
    _check_den(x)
    if j < 0:
        raise ValueError("order must be >= 0")
    if x.denominator == 1 and x <= 0:
        raise PoleError(f"polygamma pole at {x}")
    # shift x into (0, 1]: psi(x+1) = psi(x) + (-1)^j j!/x^(j+1)
    x0 = x - (x.numerator // x.denominator)
    if x0 == 0:
        x0 = Fraction(1)
    out = _polygamma_base(j, x0)
    c = Fraction(0)
    sgn = (-1) ** j * factorial(j)
    if x > x0:
        t = x0
        while t < x:
            c += sgn / t ** (j + 1)
            t += 1
    else:
        t = x
        while t < x0:
            c -= sgn / t ** (j + 1)
            t += 1
    return out + ClosedForm.const(c)


def certify_polygamma_table(digits: int = 30, max_order: int = 6):
    """Check every base value against mpmath's polygamma; runs once per process."""
    global _certified
    import mpmath

    from .atoms import eval_closedform
    with _cert_lock:
        if _certified:
            return
        for x0 in _DIGAMMA:
            for j in range(max_order + 1):
                v = eval_closedform(_polygamma_base(j, x0), digits)
                with mpmath.workdps(digits + 10):
                    ref = mpmath.psi(j, mpmath.mpf(x0.numerator) / x0.denominator)
                    if abs(v.mid - ref) > v.rad + mpmath.mpf(10) ** (-digits) * max(1, abs(ref)):
                        raise AssertionError(f"polygamma table entry ({j}, {x0}) failed certification")
        _certified = True


def gamma_value(x) -> ClosedForm:
    """Gamma(x) as (rational) x (weight-0 atoms, pi powers) for denominators 1, 2, 4."""
    x = Fraction(x)
    _check_den(x)
    if x.denominator == 1 and x <= 0:
        raise PoleError(f"Gamma pole at {x}")
    frac_part = x - (x.numerator // x.denominator)
    if frac_part == 0:
        x0, base = Fraction(1), ClosedForm.const(1)
    elif frac_part == Fraction(1, 2):
        x0, base = Fraction(1, 2), ClosedForm.atom(SQRTPI)
    elif frac_part == Fraction(1, 4):
        x0, base = Fraction(1, 4), ClosedForm.atom(GAMMA14)
    else:
        # reflection: Gamma(3/4) = pi*sqrt(2)/Gamma(1/4)
        x0, base = Fraction(3, 4), ClosedForm({mono(PI, SQRT2, (GAMMA14, -1)): 1})
    c = Fraction(1)
    t = x0
    while t < x:
        c *= t
        t += 1
    while t > x:
        t -= 1
        c /= t
    return base.scale(c)


def _invert_monomial_form(f: ClosedForm) -> ClosedForm:
    (m, c), = f.items()
    return ClosedForm({tuple((a, -e) for a, e in m): 1 / c})


def beta_function(a, b) -> ClosedForm:
    """B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b)."""
    a, b = Fraction(a), Fraction(b)
    return (gamma_value(a) * gamma_value(b) * _invert_monomial_form(gamma_value(a + b))).canonical()


def beta_log_moment(p, q, nlog: int) -> ClosedForm:
    """Integral over [0,1] of t^p (1-t)^q log(t)^nlog, i.e. the nlog-th p-derivative of B(p+1, q+1)."""
    p, q = Fraction(p), Fraction(q)
    if p <= -1 or q <= -1:
        raise DivergentError(f"moment diverges for p={p}, q={q}")
    for v in (p, q):
        _check_den(v)
    if nlog < 0:
        raise ValueError("nlog must be >= 0")
    g = [polygamma(j, p + 1) - polygamma(j, p + q + 2) for j in range(nlog)]
    # complete Bell polynomial: Y_{n+1} = sum_i C(n,i) Y_{n-i} g_{i+1}
    Y = [ClosedForm.const(1)]
    for n in range(nlog):
        acc = ClosedForm()
        for i in range(n + 1):
            acc = acc + (Y[n - i] * g[i]).scale(comb(n, i))
        Y.append(acc)
    out = (beta_function(p + 1, q + 1) * Y[nlog]).canonical()
    assert EULER_GAMMA not in out.atoms(), "Euler gamma failed to cancel"
    return out


def base_sum_k1(d: int, j: int, m: int, start: int = 0) -> ClosedForm:
    """sum_{n >= start} a_n / (d*n + j)^m with a_n = binom(2n,n)/4^n, for j >= 1.

    Uses 1/(dn+j)^m = (-1)^(m-1)/(m-1)! * int_0^1 x^(dn+j-1) log(x)^(m-1) dx and
    sum a_n x^(dn) = (1 - x^d)^(-1/2), then t = x^d.
    """
    if d not in (2, 4):
        raise ValueError("d must be 2 or 4")
    if m < 1:
        raise ValueError("m must be >= 1")
    if j < 1:
        raise PoleError(f"j={j} < 1: pole at or before n=0, reduce it first")
    coef = Fraction((-1) ** (m - 1), factorial(m - 1) * d ** m)
    full = beta_log_moment(Fraction(j, d) - 1, Fraction(-1, 2), m - 1).scale(coef)
    head = Fraction(0)
    a = Fraction(1)
    for n in range(start):
        head += a / Fraction(d * n + j) ** m
        a *= Fraction(2 * n + 1, 2 * n + 2)
    return full - ClosedForm.const(head)
