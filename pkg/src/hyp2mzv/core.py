"""Exact domain types: Gaussian-rational coefficients, constant atoms and closed forms."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping

__all__ = [
    "GaussianRational", "gq", "Atom", "ClosedForm", "Monomial",
    "PI", "LOG2", "SQRT2", "SQRTPI", "GAMMA14", "EULER_GAMMA", "CATALAN",
    "zeta", "beta", "li_half", "imli", "hzeta4", "mz", "qmz",
    "bernoulli", "euler_number", "zeta_even", "beta_odd",
]


class GaussianRational:
    """Exact ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(x)

    def is_real(self) -> bool:
        return self.im == 0

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        o = _gq_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _gq_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _gq_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _gq_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _gq_or_none(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        num = self * o.conjugate()
        return GaussianRational(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        o = _gq_or_none(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return GaussianRational(1) / self ** (-e)
        out, base = GaussianRational(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        o = _gq_or_none(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if self.im == 0:
            return _frac_str(self.re)
        if self.re == 0:
            return f"{_frac_str(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"({_frac_str(self.re)}{sign}{_frac_str(abs(self.im))}i)"

    def to_mp(self):
        import mpmath
        if self.im == 0:
            return mpmath.mpf(self.re.numerator) / self.re.denominator
        return mpmath.mpc(mpmath.mpf(self.re.numerator) / self.re.denominator,
                          mpmath.mpf(self.im.numerator) / self.im.denominator)


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _gq_or_none(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    if isinstance(x, complex):
        return GaussianRational.coerce(x)
    return None


def gq(x=0, y=0) -> GaussianRational:
    if isinstance(x, GaussianRational) and y == 0:
        return x
    if isinstance(x, str):
        x = Fraction(x)
    if isinstance(y, str):
        y = Fraction(y)
    return GaussianRational(x, y)


# --------------------------------------------------------------------------
# Atoms

_KIND_ORDER = {k: i for i, k in enumerate([
    "sqrt2", "sqrtpi", "gamma14", "pi", "log2", "gammaE", "zeta", "beta",
    "hzeta", "li", "imli", "mz", "qmz",
])}


@dataclass(frozen=True, order=False)
class Atom:
    """A named transcendental constant.

    ``args`` depends on ``kind``: ``(n,)`` for zeta/beta/li/imli, ``(offset,)``
    for hzeta (zeta(4, offset/4)), ``(s, signs)`` for mz and
    ``(s, chars, part)`` for qmz, where ``chars`` are exponents of ``i``.
    """

    kind: str
    args: tuple = ()

    def __post_init__(self):
        k, a = self.kind, self.args
        if k not in _KIND_ORDER:
            raise ValueError(f"unknown atom kind {k!r}")
        if k in ("zeta", "li", "imli") and (len(a) != 1 or a[0] < 1):
            raise ValueError(f"bad argument for {k}: {a}")
        if k == "zeta" and a[0] < 2:
            raise ValueError("zeta(1) diverges")
        if k == "beta" and (len(a) != 1 or a[0] < 1):
            raise ValueError(f"bad argument for beta: {a}")
        if k == "hzeta" and a not in ((1,), (3,)):
            raise ValueError("hzeta offset must be 1 or 3 (zeta(4,1/4), zeta(4,3/4))")
        if k == "mz":
            s, signs = a
            if len(s) != len(signs) or not s or any(x not in (1, -1) for x in signs):
                raise ValueError(f"bad mz signature {a}")
            if s[0] == 1 and signs[0] == 1:
                raise ValueError("divergent mz signature")
        if k == "qmz":
            s, chars, part = a
            if len(s) != len(chars) or not s or part not in ("re", "im"):
                raise ValueError(f"bad qmz signature {a}")
            if s[0] == 1 and chars[0] % 4 == 0:
                raise ValueError("divergent qmz signature")

    @property
    def weight(self) -> int:
        k, a = self.kind, self.args
        if k in ("sqrt2", "sqrtpi", "gamma14"):
            return 0
        if k in ("pi", "log2", "gammaE"):
            return 1
        if k in ("zeta", "beta", "li", "imli"):
            return a[0]
        if k == "hzeta":
            return 4
        return sum(a[0])

    @property
    def level(self) -> int:
        """Smallest CMZV level whose constants include this atom."""
        k, a = self.kind, self.args
        if k in ("pi", "zeta", "gammaE", "sqrt2", "sqrtpi", "gamma14"):
            return 1
        if k in ("log2", "li", "mz"):
            return 2
        return 4

    def sort_key(self):
        a = self.args
        if self.kind == "mz":
            a = (len(a[0]), a[0], a[1])
        elif self.kind == "qmz":
            a = (len(a[0]), a[0], a[1], a[2])
        return (_KIND_ORDER[self.kind], a)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        from .parser import format_atom
        return format_atom(self)

    def __repr__(self):
        return f"Atom({self})"


PI = Atom("pi")
LOG2 = Atom("log2")
SQRT2 = Atom("sqrt2")
SQRTPI = Atom("sqrtpi")
GAMMA14 = Atom("gamma14")
EULER_GAMMA = Atom("gammaE")
CATALAN = Atom("beta", (2,))


def zeta(n: int) -> Atom:
    return Atom("zeta", (n,))


def beta(n: int) -> Atom:
    return Atom("beta", (n,))


def li_half(n: int) -> Atom:
    return Atom("li", (n,))


def imli(n: int) -> Atom:
    return Atom("imli", (n,))


def hzeta4(offset: int) -> Atom:
    return Atom("hzeta", (offset,))


def mz(s, signs) -> Atom:
    return Atom("mz", (tuple(s), tuple(signs)))


def qmz(s, chars, part="re") -> Atom:
    return Atom("qmz", (tuple(s), tuple(c % 4 for c in chars), part))


# --------------------------------------------------------------------------
# Monomials and closed forms

# A monomial is a sorted tuple of (Atom, exponent) with nonzero exponents.
Monomial = tuple

ONE: Monomial = ()


def mono(*factors) -> Monomial:
    """Build a canonical monomial from atoms or (atom, exponent) pairs."""
    acc: dict = {}
    for f in factors:
        a, e = (f, 1) if isinstance(f, Atom) else f
        acc[a] = acc.get(a, 0) + e
    return _canon_mono(acc)


def _canon_mono(acc: Mapping) -> Monomial:
    return tuple(sorted(((a, e) for a, e in acc.items() if e != 0),
                        key=lambda t: t[0].sort_key()))


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for a, e in m2:
        acc[a] = acc.get(a, 0) + e
    return _canon_mono(acc)


def mono_weight(m: Monomial) -> int:
    return sum(a.weight * e for a, e in m)


def mono_key(m: Monomial):
    return (mono_weight(m), tuple((a.sort_key(), e) for a, e in m))


class ClosedForm:
    """Finite sum of GaussianRational coefficients times atom monomials."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for m, c in items:
            c = GaussianRational.coerce(c)
            if c.is_zero():
                continue
            acc[m] = acc.get(m, GaussianRational(0)) + c
        self._terms = {m: acc[m] for m in sorted(acc, key=mono_key) if not acc[m].is_zero()}
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c) -> "ClosedForm":
        return cls({ONE: c})

    @classmethod
    def atom(cls, a: Atom, power: int = 1, coeff=1) -> "ClosedForm":
        return cls({mono((a, power)): coeff})

    @classmethod
    def zero(cls) -> "ClosedForm":
        return cls()

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m: Monomial) -> GaussianRational:
        return self._terms.get(m, GaussianRational(0))

    def atoms(self) -> set:
        return {a for m in self._terms for a, _ in m}

    def weight(self) -> int:
        return max((mono_weight(m) for m in self._terms), default=0)

    def is_constant(self) -> bool:
        return all(m == ONE for m in self._terms)

    def constant_value(self) -> GaussianRational:
        return self._terms.get(ONE, GaussianRational(0))

    # ring operations
    def __add__(self, other):
        other = _as_form(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, GaussianRational(0)) + c
        return ClosedForm(acc)

    __radd__ = __add__

    def __neg__(self):
        return ClosedForm({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_form(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_form(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, complex)):
            return self.scale(other)
        other = _as_form(other)
        if other is None:
            return NotImplemented
        acc: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, GaussianRational(0)) + c1 * c2
        return ClosedForm(acc)

    __rmul__ = __mul__

    def scale(self, c) -> "ClosedForm":
        c = GaussianRational.coerce(c)
        return ClosedForm({m: v * c for m, v in self._terms.items()})

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction, GaussianRational)):
            return self.scale(GaussianRational(1) / GaussianRational.coerce(c))
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = ClosedForm.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = _as_form(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def substitute(self, atom: Atom, value: "ClosedForm") -> "ClosedForm":
        """Replace positive powers of ``atom`` by powers of ``value``."""
        out = ClosedForm()
        for m, c in self._terms.items():
            rest, power = [], 0
            for a, e in m:
                if a == atom:
                    power = e
                else:
                    rest.append((a, e))
            if power < 0:
                raise ValueError(f"cannot substitute negative power of {atom}")
            out = out + ClosedForm({_canon_mono(dict(rest)): c}) * (value ** power)
        return out

    def canonical(self) -> "ClosedForm":
        from .canon import canonicalize
        return canonicalize(self)

    def __repr__(self):
        return f"ClosedForm({self})"

    def __str__(self):
        from .parser import format_closedform
        return format_closedform(self)


def _as_form(x):
    if isinstance(x, ClosedForm):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return ClosedForm.const(x)
    if isinstance(x, Atom):
        return ClosedForm.atom(x)
    return None


# --------------------------------------------------------------------------
# exact number-theoretic helpers

_BERN = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number with B1 = -1/2."""
    while len(_BERN) <= n:
        m = len(_BERN)
        s = sum(comb(m + 1, k) * _BERN[k] for k in range(m))
        _BERN.append(-s / (m + 1))
    return _BERN[n]


_EULER = [1]


def euler_number(n: int) -> int:
    """Euler (secant) numbers E_n: 1, 0, -1, 0, 5, 0, -61, ..."""
    while len(_EULER) <= n:
        m = len(_EULER)
        if m % 2:
            _EULER.append(0)
        else:
            _EULER.append(-sum(comb(m, k) * _EULER[k] for k in range(0, m, 2)))
    return _EULER[n]


def zeta_even(n: int) -> Fraction:
    """Rational r with zeta(n) = r * pi^n for even n >= 2."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")
    return Fraction((-1) ** (n // 2 + 1) * 2 ** (n - 1)) * bernoulli(n) / factorial(n)


def beta_odd(n: int) -> Fraction:
    """Rational r with beta(n) = r * pi^n for odd n >= 1."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd and >= 1")
    k = (n - 1) // 2
    return Fraction((-1) ** k * euler_number(2 * k), 4 ** (k + 1) * factorial(2 * k))
