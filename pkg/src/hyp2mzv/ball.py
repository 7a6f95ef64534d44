"""Midpoint-radius ("ball") numbers on top of mpmath."""
from __future__ import annotations

import mpmath

__all__ = ["BigReal", "ball"]


def _ulp(x) -> mpmath.mpf:
    # one unit of rounding at the current working precision
    return abs(x) * mpmath.eps * 2


class BigReal:
    """A real (or complex) number known to lie within ``rad`` of ``mid``."""

    __slots__ = ("mid", "rad")

    def __init__(self, mid, rad=0):
        if isinstance(mid, BigReal):
            mid, rad = mid.mid, mid.rad + rad
        if isinstance(mid, mpmath.mpc):
            self.mid = mid
        else:
            self.mid = mpmath.mpmathify(mid)
        self.rad = abs(mpmath.mpf(rad))

    @classmethod
    def exact(cls, x) -> "BigReal":
        return cls(x, 0)

    @property
    def real(self) -> "BigReal":
        return BigReal(mpmath.re(self.mid), self.rad)

    @property
    def imag(self) -> "BigReal":
        return BigReal(mpmath.im(self.mid), self.rad)

    def is_complex(self) -> bool:
        return isinstance(self.mid, mpmath.mpc) and self.mid.imag != 0

    def __add__(self, o):
        o = ball(o)
        s = self.mid + o.mid
        return BigReal(s, self.rad + o.rad + _ulp(s))

    __radd__ = __add__

    def __neg__(self):
        return BigReal(-self.mid, self.rad)

    def __sub__(self, o):
        return self + (-ball(o))

    def __rsub__(self, o):
        return ball(o) - self

    def __mul__(self, o):
        o = ball(o)
        p = self.mid * o.mid
        r = abs(self.mid) * o.rad + abs(o.mid) * self.rad + self.rad * o.rad
        return BigReal(p, r + _ulp(p))

    __rmul__ = __mul__

    def inverse(self) -> "BigReal":
        m = abs(self.mid)
        if m <= self.rad:
            raise ZeroDivisionError("ball contains zero")
        q = 1 / self.mid
        return BigReal(q, self.rad / (m * (m - self.rad)) + _ulp(q))

    def __truediv__(self, o):
        return self * ball(o).inverse()

    def __rtruediv__(self, o):
        return ball(o) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("integer exponents only")
        if e < 0:
            return (self ** (-e)).inverse()
        out = BigReal(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __abs__(self):
        return BigReal(abs(self.mid), self.rad)

    def contains(self, x, slack=0) -> bool:
        return abs(self.mid - ball(x).mid) <= self.rad + ball(x).rad + slack

    def overlaps(self, o) -> bool:
        return self.contains(o)

    def digits(self) -> int:
        """Number of correct significant decimal digits implied by the radius."""
        if self.rad == 0:
            return mpmath.mp.dps
        m = abs(self.mid)
        if m == 0:
            return 0
        return max(0, int(mpmath.floor(mpmath.log10(m / self.rad))))

    def to_string(self, digits: int | None = None) -> str:
        """Decimal string truncated to the certified digits (or fewer if asked)."""
        d = self.digits()
        if digits is not None:
            d = min(d, digits)
        d = max(d, 1)
        if self.is_complex():
            re_s = mpmath.nstr(self.mid.real, d)
            im_s = mpmath.nstr(self.mid.imag, d)
            return f"({re_s} + {im_s}i)"
        return mpmath.nstr(mpmath.re(self.mid), d)

    def __float__(self):
        return float(mpmath.re(self.mid))

    def __complex__(self):
        return complex(self.mid)

    def __repr__(self):
        return f"BigReal({mpmath.nstr(self.mid, 20)} +/- {mpmath.nstr(self.rad, 3)})"

    def __str__(self):
        return self.to_string()


def ball(x) -> BigReal:
    if isinstance(x, BigReal):
        return x
    from .core import GaussianRational
    if isinstance(x, GaussianRational):
        v = x.to_mp()
        return BigReal(v, 0 if x.re.denominator == 1 and x.im.denominator == 1 else _ulp(v))
    if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, float):
        v = mpmath.mpf(x.numerator) / x.denominator
        return BigReal(v, 0 if x.denominator == 1 else _ulp(v))
    return BigReal(x)
