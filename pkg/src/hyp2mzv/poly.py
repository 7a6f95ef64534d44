"""Univariate polynomials and rational functions in ``n`` over the Gaussian rationals."""
from __future__ import annotations

from fractions import Fraction

from .core import GaussianRational, gq

__all__ = ["Poly", "RationalFunction"]

_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)


class Poly:
    """Dense polynomial, coefficients stored low degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [GaussianRational.coerce(x) for x in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self.c = tuple(c)

    @classmethod
    def n(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def const(cls, x) -> "Poly":
        return cls([x])

    @classmethod
    def linear(cls, a, b) -> "Poly":
        """``a*n + b``."""
        return cls([b, a])

    @property
    def deg(self) -> int:
        return len(self.c) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.c

    def lead(self) -> GaussianRational:
        return self.c[-1] if self.c else _ZERO

    def __call__(self, x):
        x = GaussianRational.coerce(x)
        acc = _ZERO
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def eval_mp(self, x):
        acc = 0
        for a in reversed(self.c):
            acc = acc * x + a.to_mp()
        return acc

    def __add__(self, o):
        o = _as_poly(o)
        n = max(len(self.c), len(o.c))
        return Poly([(self.c[i] if i < len(self.c) else _ZERO) + (o.c[i] if i < len(o.c) else _ZERO)
                     for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-a for a in self.c])

    def __sub__(self, o):
        return self + (-_as_poly(o))

    def __rsub__(self, o):
        return _as_poly(o) - self

    def __mul__(self, o):
        o = _as_poly(o)
        if self.is_zero() or o.is_zero():
            return Poly()
        out = [_ZERO] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a.is_zero():
                continue
            for j, b in enumerate(o.c):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Poly([1])
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, o: "Poly"):
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        q = [_ZERO] * max(len(r) - len(o.c) + 1, 0)
        lo = o.lead()
        for i in range(len(r) - len(o.c), -1, -1):
            coef = r[i + len(o.c) - 1] / lo
            q[i] = coef
            if coef.is_zero():
                continue
            for j, b in enumerate(o.c):
                r[i + j] = r[i + j] - coef * b
        return Poly(q), Poly(r[: len(o.c) - 1])

    def __floordiv__(self, o):
        return self.divmod(_as_poly(o))[0]

    def __mod__(self, o):
        return self.divmod(_as_poly(o))[1]

    def monic(self) -> "Poly":
        lo = self.lead()
        return Poly([a / lo for a in self.c])

    def shift(self, h) -> "Poly":
        """``p(n + h)``."""
        h = GaussianRational.coerce(h)
        out = Poly()
        for a in reversed(self.c):
            out = out * Poly([h, 1]) + Poly([a])
        return out

    def scale_var(self, s) -> "Poly":
        """``p(s * n)``."""
        s = GaussianRational.coerce(s)
        return Poly([a * s ** i for i, a in enumerate(self.c)])

    def derivative(self) -> "Poly":
        return Poly([a * i for i, a in enumerate(self.c)][1:])

    def is_real(self) -> bool:
        return all(a.is_real() for a in self.c)

    def __eq__(self, o):
        o = _as_poly(o)
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_poly(self)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly([x])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(len(p.c) - 1, -1, -1):
        a = p.c[i]
        if a.is_zero():
            continue
        if i == 0:
            mon = ""
        elif i == 1:
            mon = "n"
        else:
            mon = f"n^{i}"
        if a.is_real():
            neg = a.re < 0
            mag = gq(abs(a.re))
        else:
            neg = False
            mag = a
        if mon and mag == 1:
            body = mon
        elif mon and mag.is_real() and mag.re.denominator == 1:
            body = f"{mag}{mon}"
        elif mon:
            body = f"{mag}*{mon}"
        else:
            body = str(mag)
        parts.append(("-" if neg else "+", body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


class RationalFunction:
    """``num/den`` in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = Poly([1]) if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den) if not num.is_zero() else den.monic()
        if not num.is_zero() and g.deg > 0:
            num = num // g
            den = den // g
        if num.is_zero():
            den = Poly([1])
        lo = den.lead()
        self.num = Poly([a / lo for a in num.c])
        self.den = Poly([a / lo for a in den.c])

    @classmethod
    def n(cls) -> "RationalFunction":
        return cls(Poly.n())

    @property
    def degree(self) -> int:
        """deg(num) - deg(den); very negative for the zero function."""
        if self.num.is_zero():
            return -10 ** 9
        return self.num.deg - self.den.deg

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def eval_mp(self, x):
        return self.num.eval_mp(x) / self.den.eval_mp(x)

    def __add__(self, o):
        o = _as_rf(o)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, o):
        return self + (-_as_rf(o))

    def __rsub__(self, o):
        return _as_rf(o) - self

    def __mul__(self, o):
        o = _as_rf(o)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _as_rf(o)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, o):
        return _as_rf(o) / self

    def __pow__(self, e: int):
        if e < 0:
            return RationalFunction(1) / self ** (-e)
        return RationalFunction(self.num ** e, self.den ** e)

    def shift(self, h) -> "RationalFunction":
        return RationalFunction(self.num.shift(h), self.den.shift(h))

    def __eq__(self, o):
        o = _as_rf(o)
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_real(self) -> bool:
        return self.num.is_real() and self.den.is_real()

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        from .parser import format_ratfunc
        return format_ratfunc(self)


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(_as_poly(x))
