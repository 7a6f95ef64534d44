"""Integer-relation fitting of numbers against graded atom monomial bases."""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations_with_replacement

import mpmath
from flint import fmpz_mat

from .atoms import eval_atom
from .ball import BigReal
from .core import (
    CATALAN, LOG2, PI, ClosedForm, beta, imli, li_half, mono_key, mono_weight, mz, qmz, zeta,
)
from .errors import NoRelation, PrecisionError

__all__ = ["generators", "monomial_basis", "mixed_basis", "fit", "find_relation",
           "precision_budget", "DEFAULT_HEIGHT"]

DEFAULT_HEIGHT = 10 ** 7

# irreducible atoms by (level, weight); every product of these of total weight w
# spans the weight-w space used for fitting.
_GENS = {
    1: {1: [PI], 3: [zeta(3)], 5: [zeta(5)], 7: [zeta(7)]},
    2: {1: [LOG2], 4: [li_half(4)], 5: [li_half(5)],
        6: [li_half(6), mz([5, 1], [-1, 1])],
        7: [li_half(7), mz([5, 1, 1], [-1, 1, 1])],
        8: [li_half(8), mz([7, 1], [-1, 1]), mz([5, 1, 1, 1], [-1, 1, -1, 1])]},
    4: {2: [CATALAN], 3: [imli(3)], 4: [imli(4), beta(4)],
        5: [imli(5), qmz([4, 1], [1, 0], "im"), qmz([4, 1], [1, 2], "im"),
            qmz([3, 1, 1], [0, 0, 1], "re")]},
}
# the level-4 generator list is only known to be complete through weight 5
LEVEL4_MAX_WEIGHT = 5


def generators(level: int, max_weight: int = 8) -> dict:
    """weight -> list of irreducible atoms admitted at ``level``."""
    if level not in (1, 2, 4):
        raise ValueError("level must be 1, 2 or 4")
    out: dict = {}
    for lv in (1, 2, 4):
        if lv > level:
            break
        for w, atoms in _GENS[lv].items():
            if w <= max_weight:
                out.setdefault(w, []).extend(atoms)
    return out


def _partitions(w, parts):
    """Multisets of generator weights (from ``parts``) summing to ``w``."""
    if w == 0:
        yield ()
        return
    for p in parts:
        if p > w:
            continue
        for rest in _partitions(w - p, [q for q in parts if q <= p]):
            yield (p,) + rest


def monomial_basis(weight: int, level: int) -> list:
    """All monomials of exactly ``weight`` over the irreducible atoms of ``level``."""
    if weight > 8:
        raise ValueError("weight must be <= 8")
    if weight < 0:
        return []
    gens = generators(level, weight)
    parts = sorted(gens, reverse=True)
    seen = set()
    for shape in _partitions(weight, parts):
        counts: dict = {}
        for p in shape:
            counts[p] = counts.get(p, 0) + 1
        pools = [list(combinations_with_replacement(gens[p], c)) for p, c in sorted(counts.items())]
        for choice in _product(pools):
            acc: dict = {}
            for group in choice:
                for a in group:
                    acc[a] = acc.get(a, 0) + 1
            seen.add(tuple(sorted(acc.items())))
    return sorted(seen, key=mono_key)


def _product(pools):
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for rest in _product(pools[1:]):
            yield (head,) + rest


def mixed_basis(max_weight: int, level: int) -> list:
    """Monomials of every weight from 0 to ``max_weight``."""
    out = []
    for w in range(max_weight + 1):
        out.extend(monomial_basis(w, level))
    return out


def precision_budget(n: int, height: int) -> int:
    """Digits a target needs for a basis of ``n`` monomials and coefficient bound ``height``."""
    return 10 + math.ceil(n * math.log10(max(height, 2)))


def _mono_value(m, digits):
    v = mpmath.mpf(1)
    for a, e in m:
        v *= eval_atom(a, digits).mid ** e
    return v


def find_relation(xs, digits: int, height: int):
    """Smallest integer vector c with sum c_i x_i ~ 0 (LLL), or None.

    Returns ``(c, residual)`` with c[0] != 0.
    """
    n = len(xs)
    scale = mpmath.mpf(10) ** digits
    rows = []
    for i, x in enumerate(xs):
        row = [0] * n
        row[i] = 1
        rows.append(row + [int(mpmath.nint(x * scale))])
    red = fmpz_mat(rows).lll()
    best = None
    for r in range(red.nrows()):
        c = [int(red[r, i]) for i in range(n)]
        if c[0] == 0 or max(abs(t) for t in c) > height:
            continue
        res = abs(mpmath.fsum(ci * x for ci, x in zip(c, xs)))
        if best is None or res < best[1]:
            best = (c, res)
    return best


def fit(value, basis, height_bound: int = DEFAULT_HEIGHT, digits: int | None = None,
        verify: bool = True) -> ClosedForm:
    """Closed form over ``basis`` equal to ``value``.

    ``value`` is a BigReal, or a callable ``digits -> BigReal`` so the relation
    can be re-checked at 1.5x precision.  Raises NoRelation or PrecisionError.
    """
    basis = list(basis)
    get = value if callable(value) else None
    need = precision_budget(len(basis), height_bound)
    if digits is None:
        digits = max(need, 30)
    if get is not None:
        val = get(digits)
    else:
        val = value if isinstance(value, BigReal) else BigReal(mpmath.mpf(value), 0)
    avail = val.digits() if val.rad > 0 else digits
    if avail < need:
        raise PrecisionError(
            f"target carries {avail} digits; basis of {len(basis)} with height {height_bound} "
            f"needs {need}", achieved=avail)
    work = avail if (get is None and val.rad > 0) else min(digits, avail)
    with mpmath.workdps(work + 20):
        xs = [val.mid] + [_mono_value(m, work + 10) for m in basis]
        hit = find_relation(xs, work - 2, height_bound)
        tol = mpmath.mpf(10) ** (-(work - 5))
        if hit is None or hit[1] > tol * max(1, max(abs(t) for t in hit[0])):
            quality = None if hit is None else float(mpmath.log10(hit[1] + mpmath.mpf(10) ** (-work - 10)))
            raise NoRelation(f"no relation with height <= {height_bound} at {work} digits",
                             quality=quality)
        c = hit[0]
        # independent cross-check
        pq = mpmath.pslq(xs, maxcoeff=height_bound, maxsteps=20000, tol=tol)
        if pq is not None and pq[0] != 0:
            ratio = Fraction(pq[0], c[0])
            if any(Fraction(p) != ratio * q for p, q in zip(pq, c)):
                raise NoRelation("lattice reduction and PSLQ disagree; raise the precision")
    form = ClosedForm({m: Fraction(-ci, c[0]) for m, ci in zip(basis, c[1:]) if ci})
    if verify:
        _verify(form, val, get, work)
    return form


def _verify(form, val, get, work):
    from .atoms import eval_closedform
    hi = int(work * 1.5) if get is not None else work
    target = get(hi) if get is not None else val
    v = eval_closedform(form, hi + 5)
    with mpmath.workdps(hi + 10):
        diff = abs(v.mid - target.mid)
        tol = v.rad + target.rad + mpmath.mpf(10) ** (-(hi - 5))
        if diff > tol:
            raise NoRelation(f"relation fails re-verification at {hi} digits "
                             f"(residual {mpmath.nstr(diff, 3)})")


def basis_weight(m) -> int:
    return mono_weight(m)
