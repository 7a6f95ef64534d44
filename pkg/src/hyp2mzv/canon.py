"""Exact rewrite rules bringing closed forms onto a linearly independent atom basis."""
from __future__ import annotations

from fractions import Fraction

from .core import (
    CATALAN, LOG2, PI, SQRT2, SQRTPI, Atom, ClosedForm, beta, beta_odd,
    mono, zeta, zeta_even,
)

__all__ = ["canonicalize", "atom_rewrite", "is_canonical_atom", "to_hurwitz"]


def _f(*pairs) -> ClosedForm:
    out = ClosedForm()
    for coeff, m in pairs:
        out = out + ClosedForm({m: coeff})
    return out


def atom_rewrite(a: Atom) -> ClosedForm | None:
    """Exact replacement for a reducible atom, or None if ``a`` is already canonical."""
    k = a.kind
    if k == "zeta" and a.args[0] % 2 == 0:
        n = a.args[0]
        return ClosedForm({mono((PI, n)): zeta_even(n)})
    if k == "beta" and a.args[0] % 2 == 1:
        n = a.args[0]
        return ClosedForm({mono((PI, n)): beta_odd(n)})
    if k == "hzeta":
        # zeta(4, 1/4) = 128*((15/16)*zeta(4) + beta(4)); zeta(4, 3/4) flips the beta sign
        sign = 1 if a.args[0] == 1 else -1
        return _f((Fraction(4, 3), mono((PI, 4))), (128 * sign, mono(beta(4))))
    if k == "li":
        n = a.args[0]
        if n == 1:
            return ClosedForm.atom(LOG2)
        if n == 2:
            return _f((Fraction(1, 12), mono((PI, 2))), (Fraction(-1, 2), mono((LOG2, 2))))
        if n == 3:
            return _f((Fraction(7, 8), mono(zeta(3))),
                      (Fraction(-1, 12), mono((PI, 2), LOG2)),
                      (Fraction(1, 6), mono((LOG2, 3))))
    if k == "imli":
        n = a.args[0]
        if n == 1:
            return ClosedForm({mono(PI): Fraction(1, 4)})
        if n == 2:
            return _f((1, mono(CATALAN)), (Fraction(-1, 8), mono(PI, LOG2)))
    return None


def is_canonical_atom(a: Atom) -> bool:
    return atom_rewrite(a) is None


def _rewrite_power(a: Atom, e: int):
    """Split ``a**e`` into (coefficient, leftover monomial factors, reducible part or None)."""
    if a == SQRT2:
        q, r = divmod(e, 2)
        return Fraction(2) ** q, [(SQRT2, r)] if r else [], None
    if a == SQRTPI:
        q, r = divmod(e, 2)
        factors = []
        if q:
            factors.append((PI, q))
        if r:
            factors.append((SQRTPI, r))
        return Fraction(1), factors, None
    rw = atom_rewrite(a)
    if rw is None:
        return Fraction(1), [(a, e)], None
    if e < 0:
        raise ValueError(f"negative power of reducible atom {a}")
    return Fraction(1), [], rw ** e


def canonicalize(f: ClosedForm) -> ClosedForm:
    """Rewrite reducible atoms until a fixed point; weight-0 atoms are normalised."""
    out = ClosedForm()
    changed = False
    for m, c in f.items():
        coeff = Fraction(1)
        factors = []
        extra = ClosedForm.const(1)
        for a, e in m:
            k, fs, rw = _rewrite_power(a, e)
            coeff *= k
            factors.extend(fs)
            if rw is not None:
                extra = extra * rw
                changed = True
            if k != 1 or fs != [(a, e)]:
                changed = True
        out = out + ClosedForm({mono(*factors): c * coeff}) * extra
    if changed:
        return canonicalize(out)
    return out


def to_hurwitz(f: ClosedForm) -> ClosedForm:
    """Presentation basis: express beta(4) through zeta(4,1/4) and zeta(4,3/4)."""
    from .core import hzeta4
    b4 = beta(4)
    # beta(4) = (zeta(4,1/4) - zeta(4,3/4)) / 256
    rep = ClosedForm({mono(hzeta4(1)): Fraction(1, 256), mono(hzeta4(3)): Fraction(-1, 256)})
    return f.substitute(b4, rep) if b4 in f.atoms() else f
