"""Series descriptions and exact partial-fraction decomposition."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .core import GaussianRational
from .errors import PoleError, SemanticError, TerminatingError
from .poly import Poly, RationalFunction

__all__ = ["SeriesSpec", "PoleDecomposition", "partial_fractions", "lattice_roots",
           "pochhammer_ratio"]


def _is_nonpos_int(x: GaussianRational) -> bool:
    return x.im == 0 and x.re.denominator == 1 and x.re <= 0


@dataclass(frozen=True)
class SeriesSpec:
    """A parsed ``pFq`` at rational ``z`` or a central-binomial sum.

    For ``form == "binom"`` the sum is
    ``[pi *] sum_{n >= start} sign^n * R(n) * (binom(2n, n)/4^n)^k``.
    """

    form: str
    top: tuple = ()
    bottom: tuple = ()
    z: Fraction = Fraction(1)
    k: int = 0
    R: RationalFunction | None = None
    start: int = 0
    pi_prefactor: bool = False
    sign: int = 1
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.form == "pfq":
            top = tuple(GaussianRational.coerce(a) for a in self.top)
            bottom = tuple(GaussianRational.coerce(b) for b in self.bottom)
            object.__setattr__(self, "top", top)
            object.__setattr__(self, "bottom", bottom)
            object.__setattr__(self, "z", Fraction(self.z))
            if len(top) != len(bottom) + 1:
                raise SemanticError(f"pFq needs |top| = |bottom| + 1, got {len(top)}, {len(bottom)}")
            for b in bottom:
                if _is_nonpos_int(b):
                    raise SemanticError(f"bottom parameter {b} is a nonpositive integer")
            for a in top:
                if _is_nonpos_int(a):
                    raise TerminatingError(f"top parameter {a} makes the series terminate")
        elif self.form == "binom":
            if self.k not in (-2, -1, 0, 1, 2):
                raise SemanticError(f"binomial power k={self.k} not in -2..2")
            if self.R is None:
                raise SemanticError("binomial sum needs a rational function")
            if self.sign not in (1, -1):
                raise SemanticError("sign must be +1 or -1")
            if self.start < 0:
                raise SemanticError("start index must be >= 0")
            if self.R.degree >= 0 and self.k >= 0 and self.sign == 1:
                raise SemanticError("R must decay (numerator degree < denominator degree)")
            for n0 in integer_poles(self.R.den):
                if n0 >= self.start:
                    raise PoleError(f"pole of R at n={n0} inside the summation range")
        else:
            raise SemanticError(f"unknown series form {self.form!r}")

    @property
    def is_pfq(self) -> bool:
        return self.form == "pfq"

    def __str__(self):
        from .parser import format_series
        return format_series(self)


# --------------------------------------------------------------------------
# roots on the lattice Z/d

def lattice_roots(p: Poly, d: int = 4):
    """Exact roots of ``p`` lying in ``(1/d) Z``.

    Returns ``(roots, rest)`` where ``roots`` is a list of ``(root, multiplicity)``
    and ``rest`` is the cofactor that has no such roots.
    """
    roots: dict = {}
    rest = p
    if rest.deg <= 0:
        return [], rest

    def take(cand):
        nonlocal rest
        while rest.deg > 0 and rest(cand).is_zero():
            rest = rest // Poly([-cand, 1])
            roots[cand] = roots.get(cand, 0) + 1

    # Fujiwara bound: every root has |z| <= 2 max |a_{n-k}/a_n|^(1/k)
    lead = abs(rest.c[-1].to_mp())
    nd = rest.deg
    bound = 2 * max(float(abs(rest.c[nd - k].to_mp()) / lead) ** (1.0 / k) for k in range(1, nd + 1))
    if bound <= 500:
        # exact scan of the lattice inside the Cauchy bound; robust for repeated roots
        t_max = int(bound * d) + 1
        for t in range(-t_max, t_max + 1):
            if rest.deg <= 0:
                break
            take(GaussianRational(Fraction(t, d)))
        return sorted(roots.items(), key=lambda t: t[0].re), rest
    sqfree = rest // _gcd(rest, rest.derivative())
    with mpmath.workdps(30 + 5 * sqfree.deg):
        approx = mpmath.polyroots([c.to_mp() for c in reversed(sqfree.c)],
                                  maxsteps=400, extraprec=400, error=False)
    for z in approx:
        z = mpmath.mpc(z)
        if abs(z.imag) > 1e-8:
            continue
        take(GaussianRational(Fraction(int(mpmath.nint(z.real * d)), d)))
    return sorted(roots.items(), key=lambda t: t[0].re), rest


def _gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def integer_poles(den: Poly):
    roots, _ = lattice_roots(den, 1)
    return [int(r.re) for r, _ in roots]


# --------------------------------------------------------------------------
# partial fractions

@dataclass(frozen=True)
class PoleDecomposition:
    """``poly_part(n) + sum c / (d*n + j)^m`` over ``terms = ((c, d, j, m), ...)``."""

    poly_part: Poly
    terms: tuple

    def reassemble(self) -> RationalFunction:
        out = RationalFunction(self.poly_part)
        for c, d, j, m in self.terms:
            out = out + RationalFunction(Poly([c]), Poly([j, d]) ** m)
        return out

    def poles(self):
        return sorted({(d, j) for _, d, j, _ in self.terms})


def _series_div(num: Poly, den: Poly, order: int):
    """First ``order`` Taylor coefficients of num/den at 0 (den(0) != 0)."""
    a = list(num.c) + [GaussianRational(0)] * order
    b = list(den.c) + [GaussianRational(0)] * order
    out = []
    for t in range(order):
        s = a[t]
        for i in range(1, t + 1):
            s = s - b[i] * out[t - i]
        out.append(s / b[0])
    return out


def partial_fractions(R: RationalFunction, d: int) -> PoleDecomposition:
    """Decompose ``R`` into ``c/(d n + j)^m`` terms; every pole must lie in ``(1/d) Z``."""
    quot, rem = R.num.divmod(R.den)
    roots, rest = lattice_roots(R.den, d)
    if rest.deg > 0:
        raise PoleError(f"denominator factor {rest} has poles off the lattice Z/{d}")
    terms = []
    for r, e in roots:
        shifted_num = rem.shift(r)
        other = Poly([1])
        for r2, e2 in roots:
            if r2 != r:
                other = other * Poly([r - r2, 1]) ** e2
        coeffs = _series_div(shifted_num, other, e)
        j = -r * d
        assert j.im == 0 and j.re.denominator == 1
        j = int(j.re)
        for t, g in enumerate(coeffs):
            m = e - t
            if g.is_zero():
                continue
            terms.append((g * GaussianRational(d) ** m, d, j, m))
    return PoleDecomposition(quot, tuple(terms))


def pochhammer_ratio(a: GaussianRational, b: GaussianRational) -> RationalFunction:
    """``(a)_n / (b)_n`` as a rational function of ``n`` when ``a - b`` is an integer."""
    diff = a - b
    if diff.im != 0 or diff.re.denominator != 1:
        raise ValueError(f"{a} - {b} is not an integer")
    D = int(diff.re)
    n = Poly.n()
    if D >= 0:
        num, den = Poly([1]), Poly([1])
        for i in range(1, D + 1):
            num = num * (n + (a - i))
            den = den * Poly([a - i])
        return RationalFunction(num, den)
    num, den = Poly([1]), Poly([1])
    for i in range(0, -D):
        num = num * Poly([a + i])
        den = den * (n + (a + i))
    return RationalFunction(num, den)


# --------------------------------------------------------------------------
# convergence

@dataclass(frozen=True)
class Convergence:
    """``status`` is convergent, divergent or terminating; ``rate`` is the excess
    ``s`` with terms decaying like ``n^(-1-s)`` (None for geometric decay)."""

    status: str
    rate: Fraction | None = None
    geometric: bool = False

    @property
    def ok(self) -> bool:
        return self.status == "convergent"


def term_exponent(s: SeriesSpec) -> Fraction:
    """Real part of ``e`` in ``|t_n| ~ n^e`` for z = +-1."""
    if s.form == "pfq":
        tot = sum((a.re for a in s.top), Fraction(0)) - sum((b.re for b in s.bottom), Fraction(0))
        return tot - 1
    return Fraction(s.R.degree) - Fraction(s.k, 2)


def check_convergence(s: SeriesSpec) -> Convergence:
    if s.form == "pfq":
        if any(_is_nonpos_int(a) for a in s.top):
            return Convergence("terminating")
        if abs(s.z) < 1:
            return Convergence("convergent", None, geometric=True)
        if abs(s.z) > 1:
            return Convergence("divergent")
        alternating = s.z == -1
    else:
        if s.R.is_zero():
            return Convergence("convergent", None, geometric=True)
        alternating = s.sign == -1
    e = term_exponent(s)
    rate = -1 - e
    if rate > 0 or (alternating and e < 0):
        return Convergence("convergent", rate)
    return Convergence("divergent", rate)


# --------------------------------------------------------------------------
# pFq -> central binomial sum

_HALF = GaussianRational(Fraction(1, 2))
_ONE = GaussianRational(1)


def _is_half_integer(x: GaussianRational) -> bool:
    return x.im == 0 and (x.re - Fraction(1, 2)).denominator == 1


def _is_pos_integer(x: GaussianRational) -> bool:
    return x.im == 0 and x.re.denominator == 1 and x.re >= 1


def _residue_class(x: GaussianRational):
    return (x.re - (x.re.numerator // x.re.denominator), x.im)


def pfq_to_binom(s: SeriesSpec) -> SeriesSpec:
    """Rewrite a pFq at z = +-1 as ``[pi*] sum sign^n R(n) a_n^k``.

    Half-integer parameters are measured against (1/2)_n, positive integers
    against (1)_n (the n! of the series counts as a bottom 1), and every other
    top must pair with a bottom at integer distance.
    """
    from .errors import UnmatchedShapeError
    if s.form != "pfq":
        return s
    if s.z not in (1, -1):
        raise UnmatchedShapeError(f"only z = 1 or z = -1 reduce, got z = {s.z}")
    R = RationalFunction(Poly([1]))
    k = 0
    others_top, others_bot = [], []
    for a in s.top:
        if _is_half_integer(a):
            k += 1
            R = R * pochhammer_ratio(a, _HALF)
        elif _is_pos_integer(a):
            R = R * pochhammer_ratio(a, _ONE)
        else:
            others_top.append(a)
    for b in list(s.bottom) + [_ONE]:
        if _is_half_integer(b):
            k -= 1
            R = R / pochhammer_ratio(b, _HALF)
        elif _is_pos_integer(b):
            R = R / pochhammer_ratio(b, _ONE)
        else:
            others_bot.append(b)
    groups: dict = {}
    for a in others_top:
        groups.setdefault(_residue_class(a), ([], []))[0].append(a)
    for b in others_bot:
        groups.setdefault(_residue_class(b), ([], []))[1].append(b)
    for key, (ts, bs) in groups.items():
        if len(ts) != len(bs):
            raise UnmatchedShapeError(
                f"parameters {[str(x) for x in ts]} / {[str(x) for x in bs]} do not pair at integer distance")
        ts.sort(key=lambda x: x.re)
        bs.sort(key=lambda x: x.re)
        for a, b in zip(ts, bs):
            R = R * pochhammer_ratio(a, b)
    if k not in (-2, -1, 0, 1, 2):
        raise UnmatchedShapeError(f"net power of the central binomial is {k}, outside -2..2")
    out = object.__new__(SeriesSpec)
    for name, val in (("form", "binom"), ("top", ()), ("bottom", ()), ("z", Fraction(1)),
                      ("k", k), ("R", R), ("start", 0), ("pi_prefactor", s.pi_prefactor),
                      ("sign", int(s.z)), ("meta", {"from": str(s)})):
        object.__setattr__(out, name, val)
    return out
