"""Independent numerical referee for series and nested sums.

Nothing here touches the reducer or the gamma engine.  Series at z = +-1 are
summed directly up to N and the tail is taken from the asymptotic expansion of
the term, t_n ~ C n^(-sigma) (1 + c_1/n + c_2/n^2 + ...), whose coefficients
come from Stirling's series for the Gamma ratios and the Laurent expansion of
R(n).  The tail is then a short combination of Hurwitz (or Lerch) zeta values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .ball import BigReal
from .core import GaussianRational
from .errors import DivergentError, PrecisionError
from .series import SeriesSpec, check_convergence

__all__ = ["eval_series", "eval_nested_sum", "NestedSum", "nested_sum_of_atom",
           "moment_quadrature", "series_terms"]


def _mp(x):
    return GaussianRational.coerce(x).to_mp()


# ---------------------------------------------------------------------------
# term generators

def _gamma_params(s: SeriesSpec):
    """(tops, bottoms, z, R) such that t_n = R(n) z^n prod (a)_n / prod (b)_n."""
    if s.form == "pfq":
        return list(s.top), list(s.bottom) + [GaussianRational(1)], s.z, None
    half, one = GaussianRational(Fraction(1, 2)), GaussianRational(1)
    k = s.k
    tops = [half] * k if k > 0 else [one] * (-k)
    bots = [one] * k if k > 0 else [half] * (-k)
    return tops, bots, Fraction(s.sign), s.R


def series_terms(s: SeriesSpec, n_from: int, n_to: int):
    """Terms t_n for n in [n_from, n_to) at the current precision (pi prefactor excluded)."""
    tops, bots, z, R = _gamma_params(s)
    tops = [_mp(a) for a in tops]
    bots = [_mp(b) for b in bots]
    zz = mpmath.mpf(z.numerator) / z.denominator
    first = s.start if s.form == "binom" else 0
    g = mpmath.mpf(1)
    out = []
    for n in range(n_to):
        if n >= n_from:
            if n < first:
                out.append(mpmath.mpf(0))
            else:
                out.append(g * (R.eval_mp(n) if R is not None else 1))
        num = zz
        for a in tops:
            num *= n + a
        den = 1
        for b in bots:
            den *= n + b
        g = g * num / den
    return out


def _pfq_ratio_term(s, n_max):
    """Return the gamma-part g_n for n = n_max (used for matching)."""
    return series_terms(s, n_max, n_max + 1)[0]


# ---------------------------------------------------------------------------
# asymptotic expansion of the term

def _series_exp(e, K):
    """exp of a power series with e[0] = 0, truncated to K terms."""
    out = [mpmath.mpf(0)] * K
    out[0] = mpmath.mpf(1)
    # f' = e' f  =>  k f_k = sum_{j=1}^{k} j e_j f_{k-j}
    for k in range(1, K):
        acc = 0
        for j in range(1, k + 1):
            if j < len(e):
                acc += j * e[j] * out[k - j]
        out[k] = acc / k
    return out


def _series_mul(a, b, K):
    out = [0] * K
    for i in range(min(K, len(a))):
        if a[i] == 0:
            continue
        for j in range(min(K - i, len(b))):
            out[i + j] += a[i] * b[j]
    return out


def _series_div(a, b, K):
    out = []
    for k in range(K):
        acc = a[k] if k < len(a) else 0
        for j in range(1, k + 1):
            if j < len(b):
                acc -= b[j] * out[k - j]
        out.append(acc / b[0])
    return out


def _asymptotic(s: SeriesSpec, K: int):
    """(sigma, c) with t_n ~ C n^(-sigma) sum_k c_k n^(-k), c_0 = 1."""
    tops, bots, _, R = _gamma_params(s)
    tops = [_mp(a) for a in tops]
    bots = [_mp(b) for b in bots]
    e = [mpmath.mpf(0)] * K
    for k in range(1, K):
        acc = 0
        for a in tops:
            acc += mpmath.bernpoly(k + 1, a)
        for b in bots:
            acc -= mpmath.bernpoly(k + 1, b)
        e[k] = (-1) ** (k + 1) * acc / (k * (k + 1))
    c = _series_exp(e, K)
    sigma = -(sum(tops) - sum(bots))
    if R is not None:
        num = [x.to_mp() for x in reversed(R.num.c)]
        den = [x.to_mp() for x in reversed(R.den.c)]
        c = _series_mul(c, _series_div(num, den, K), K)
        sigma -= R.num.deg - R.den.deg
        lead = num[0] / den[0]
        c = [x / lead for x in c]
    return sigma, c


def _tail_sum(sigma, c, N, z, use_lerch=False):
    """sum_{n >= N} z^n n^(-sigma) sum_k c_k n^(-k)."""
    total = 0
    for k, ck in enumerate(c):
        if ck == 0:
            continue
        sk = sigma + k
        if z == 1 and not use_lerch:
            total += ck * mpmath.zeta(sk, N)
        elif z == -1 and not use_lerch:
            a, b = mpmath.mpf(N) / 2, mpmath.mpf(N + 1) / 2
            if sk == 1:
                # zeta(s, a) - zeta(s, b) -> psi(b) - psi(a) as s -> 1
                diff = mpmath.digamma(b) - mpmath.digamma(a)
            else:
                diff = mpmath.zeta(sk, a) - mpmath.zeta(sk, b)
            total += ck * (-1) ** N * mpmath.mpf(2) ** (-sk) * diff
        else:
            total += ck * z ** N * mpmath.lerchphi(z, sk, N)
    return total


def _accelerated(s: SeriesSpec, N: int, K: int, use_lerch=False):
    terms = series_terms(s, 0, N + 1)
    head = mpmath.fsum(terms[:N])
    sigma, c = _asymptotic(s, K)
    _, _, z, _ = _gamma_params(s)
    zz = mpmath.mpf(z.numerator) / z.denominator
    model_N = zz ** N * mpmath.mpf(N) ** (-sigma) * mpmath.fsum(
        ck * mpmath.mpf(N) ** (-k) for k, ck in enumerate(c))
    C = terms[N] / model_N
    return head + C * _tail_sum(sigma, c, N, zz, use_lerch)


def _direct(s: SeriesSpec, digits: int):
    """Geometric convergence: sum until the terms are negligible, bound the tail."""
    tops, bots, z, R = _gamma_params(s)
    target = mpmath.mpf(10) ** (-(digits + 5))
    zabs = abs(mpmath.mpf(z.numerator) / z.denominator)
    total = 0
    n = 0
    chunk = 64
    while True:
        ts = series_terms(s, n, n + chunk)
        total += mpmath.fsum(ts)
        n += chunk
        last = abs(ts[-1])
        ratio = abs(ts[-1] / ts[-2]) if ts[-2] != 0 else zabs
        rho = max(ratio, zabs) * (1 + mpmath.mpf(1) / n)
        if rho < 1:
            bound = last * rho / (1 - rho)
            if bound < target * max(1, abs(total)):
                return total, bound
        if n > 2 ** 20:
            raise PrecisionError("geometric series did not settle within the term budget")


def eval_series(s: SeriesSpec, digits: int = 40, method: str = "auto", N: int | None = None) -> BigReal:
    """Value of the series with a radius below ``10^-digits`` (or PrecisionError)."""
    conv = check_convergence(s)
    if not conv.ok:
        raise DivergentError(f"series {s} is {conv.status}")
    # the asymptotic coefficients cancel heavily: guard digits grow with the target
    with mpmath.workdps(digits + max(20, digits // 3)):
        geometric = conv.geometric
        if method == "auto":
            method = "direct" if geometric else "asymptotic"
        if method == "direct":
            if not geometric:
                raise ValueError("direct summation needs |z| < 1")
            val, rad = _direct(s, digits)
        else:
            N0 = N or max(200, 4 * digits)
            K = digits // 2 + 25
            use_lerch = geometric
            v1 = _accelerated(s, N0, K, use_lerch)
            v2 = _accelerated(s, N0 + N0 // 2, K + 6, use_lerch)
            val, rad = v2, 2 * abs(v1 - v2)
        if s.pi_prefactor:
            val *= mpmath.pi
            rad *= mpmath.pi
        rad += mpmath.mpf(10) ** (-(digits + 12)) * max(1, abs(val))
        out = BigReal(val, rad)
    if rad > mpmath.mpf(10) ** (-digits) * max(1, abs(val)):
        raise PrecisionError(f"oracle reached radius {mpmath.nstr(rad, 3)}", achieved=out.digits())
    return out


# ---------------------------------------------------------------------------
# nested sums

@dataclass(frozen=True)
class NestedSum:
    """sum_{n_1 > n_2 > ... > n_r > 0} prod eps_i^{n_i} / (d_i n_i + j_i)^{s_i}.

    ``levels`` holds ``(s, eps, d, j)`` tuples, outermost first; ``eps`` is a
    complex root of unity.  ``part`` selects "re", "im" or None (complex).
    """

    levels: tuple
    part: str | None = None

    @classmethod
    def cmzv(cls, s, eps, part=None) -> "NestedSum":
        return cls(tuple((si, complex(ei), 1, 0) for si, ei in zip(s, eps)), part)


def nested_sum_of_atom(atom) -> NestedSum:
    if atom.kind == "mz":
        s, signs = atom.args
        return NestedSum.cmzv(s, signs, "re")
    if atom.kind == "qmz":
        s, chars, part = atom.args
        return NestedSum.cmzv(s, [1j ** c for c in chars], part)
    raise ValueError(f"{atom} is not a nested sum")


def _root(eps):
    e = complex(eps)
    for k, v in enumerate((1, 1j, -1, -1j)):
        if abs(e - v) < 1e-12:
            return k
    raise ValueError(f"{eps} is not a fourth root of unity")


def _prefix(ns: NestedSum, N: int):
    """Outer summand f(n) = eps^n/(d n + j)^s * inner(n) for n = 1..N-1 (index n)."""
    levels = ns.levels
    powers = [mpmath.mpc(0, 1) ** k for k in range(4)]
    inner = [mpmath.mpf(1)] * N  # inner value for "sum over indices below n"
    for s, eps, d, j in reversed(levels[1:]):
        r = _root(eps)
        cur = [mpmath.mpf(0)] * N
        acc = 0
        for n in range(1, N):
            # cur[n] = sum_{m < n} term(m) * prev[m]
            cur[n] = acc
            acc += powers[(r * n) % 4] / mpmath.mpf(d * n + j) ** s * inner[n]
        inner = cur
    s, eps, d, j = levels[0]
    r = _root(eps)
    return [0] + [powers[(r * n) % 4] / mpmath.mpf(d * n + j) ** s * inner[n] for n in range(1, N)], r


def _euler_average(partials, depth):
    """Repeated averaging of consecutive partial sums of an alternating series."""
    row = list(partials[-(depth + 1):])
    prev = None
    for _ in range(depth):
        prev = row[-1]
        row = [(row[i] + row[i + 1]) / 2 for i in range(len(row) - 1)]
    return row[-1], abs(row[-1] - prev)


def _alternating_value(f, N):
    """sum_{n} (-1)^n g(n) given f(n) = (-1)^n g(n), by averaging partial sums."""
    partials = []
    acc = 0
    for x in f:
        acc += x
        partials.append(acc)
    return _euler_average(partials, 24)


def eval_nested_sum(ns: NestedSum, digits: int = 20, N: int = 2 ** 12, N_max: int = 2 ** 16) -> BigReal:
    """Prefix-array evaluation with an accelerated outermost sum.

    Outer characters -1 and +-i are split into alternating subsequences and
    accelerated by iterated averaging when the inner characters are trivial;
    otherwise the outer index is summed in whole character periods with a fitted
    power-log tail (:func:`_block_tail`).  N is doubled
    until the radius is below ``10^-digits``; past ``N_max`` PrecisionError.
    """
    s1, eps1, d1, j1 = ns.levels[0]
    if _root(eps1) == 0 and s1 == 1:
        raise DivergentError("outermost exponent 1 with trivial character diverges")
    while True:
        out = _nested_once(ns, digits, N)
        if out.rad < mpmath.mpf(10) ** (-digits):
            return out
        if 2 * N > N_max:
            raise PrecisionError(f"nested sum reached radius {mpmath.nstr(out.rad, 3)} at N={N}",
                                 achieved=out.digits())
        N *= 2


def _period(ns: NestedSum) -> int:
    roots = {_root(lv[1]) for lv in ns.levels}
    if roots & {1, 3}:
        return 4
    return 2 if 2 in roots else 1


def _nested_once(ns: NestedSum, digits: int, N: int) -> BigReal:
    # the tail fit is ill-conditioned, so the prefix carries generous guard digits
    with mpmath.workdps(max(digits + 10, 40)):
        f, r = _prefix(ns, N)
        inner_trivial = all(_root(lv[1]) == 0 for lv in ns.levels[1:])
        if r == 2 and inner_trivial:
            # (-1)^n times a smooth sequence: averaging of partial sums is valid
            val, rad = _alternating_value(f[1:], N)
        elif r in (1, 3) and inner_trivial:
            ev = [f[n] for n in range(2, N, 2)]
            od = [f[n] for n in range(1, N, 2)]
            v1, r1 = _alternating_value(ev, N)
            v2, r2 = _alternating_value(od, N)
            val, rad = v1 + v2, r1 + r2
        else:
            val, rad = _block_tail(ns, f, N, digits)
        if ns.part == "re":
            val = mpmath.re(val)
        elif ns.part == "im":
            val = mpmath.im(val)
        rad = 4 * rad + mpmath.mpf(10) ** (-(digits + 5))
        return BigReal(val, rad)


def _hurwitz_log_tail(a: int, sigma, T):
    """sum_{t >= T} log(t)^a / t^sigma."""
    return (-1) ** a * mpmath.zeta(sigma, T, a)


def _block_tail(ns: NestedSum, f, N, digits):
    """Head up to N plus a fitted tail, summing the outer index in whole periods.

    With P the common period of all characters, the block sums
    G(t) = sum_{c<P} f(P t + c) are smooth in t and expand as
    sum_{a <= depth, b} alpha_ab log(t)^a / t^(s + b).  Two fits on different
    windows and orders give the value and the radius.
    """
    s1, eps1, d1, j1 = ns.levels[0]
    depth = len(ns.levels) - 1
    P = _period(ns)
    T = N // P  # blocks t = 1 .. T-1 are summed exactly (n = P .. N-1)
    head = mpmath.fsum(f[1:P * T])
    if depth == 0 and P == 1:
        tail = mpmath.zeta(s1, mpmath.mpf(T) + mpmath.mpf(j1) / d1) / mpmath.mpf(d1) ** s1
        return head + tail, mpmath.mpf(10) ** (-mpmath.mp.dps + 5)
    G = [None] + [mpmath.fsum(f[P * t + c] for c in range(P)) for t in range(1, T)]
    # a convergent sum with s1 = 1 must cancel its 1/t block term
    b0 = 1 if s1 == 1 else 0

    def fit(lo, B):
        cols = [(a, b) for a in range(depth + 1) for b in range(b0, B + 1)]
        step = max(1, (T - lo) // (4 * len(cols)))
        pts = list(range(lo, T, step))
        with mpmath.workdps(max(mpmath.mp.dps, 40) + 3 * len(cols)):
            # columns normalized to O(1) on the window: (log t / log T)^a (lo / t)^b
            LT = mpmath.log(T)
            norm = [LT ** a / mpmath.mpf(lo) ** b for a, b in cols]
            A = mpmath.matrix([[(mpmath.log(t) / LT) ** a * (mpmath.mpf(lo) / t) ** b for a, b in cols]
                               for t in pts])
            scale = [mpmath.mpf(t) ** s1 for t in pts]
            tot = mpmath.mpc(0)
            for part in (mpmath.re, mpmath.im):
                rhs = mpmath.matrix([part(G[t]) * scale[i] for i, t in enumerate(pts)])
                if all(x == 0 for x in rhs):
                    continue
                coef, _ = mpmath.qr_solve(A, rhs)
                sub = mpmath.fsum(coef[k] / norm[k] * _hurwitz_log_tail(a, s1 + b, T)
                                  for k, (a, b) in enumerate(cols))
                tot += sub if part is mpmath.re else 1j * sub
        return tot

    try:
        t1 = fit(T // 4, 8)
        t2 = fit(T // 2, 6)
    except ValueError:  # singular least-squares system: no certificate at this N
        return head, mpmath.inf
    return head + t1, abs(t1 - t2)


# ---------------------------------------------------------------------------
# quadrature referee for Beta log-moments

def moment_quadrature(p, q, nlog: int):
    """int_0^1 t^p (1-t)^q log(t)^nlog dt by tanh-sinh with endpoint-smoothing substitutions."""
    p = mpmath.mpf(Fraction(p).numerator) / Fraction(p).denominator
    q = mpmath.mpf(Fraction(q).numerator) / Fraction(q).denominator
    half = mpmath.mpf(1) / 2
    c = half ** (mpmath.mpf(1) / 4)

    # t = u^4 on [0, 1/2]; 1 - t = v^4 on [1/2, 1]
    def left(u):
        t = u ** 4
        return 4 * u ** 3 * t ** p * (1 - t) ** q * (4 * mpmath.log(u)) ** nlog

    def right(v):
        w = v ** 4
        t = 1 - w
        return 4 * v ** 3 * t ** p * w ** q * mpmath.log(t) ** nlog

    return mpmath.quad(left, [0, c]) + mpmath.quad(right, [0, c])
