"""Symbolic reduction of admissible series to closed forms.

A binomial sum ``sum_{n>=start} sign^n R(n) a_n^k`` (``a_n = binom(2n,n)/4^n``) is
split into units.  For ``k = 0`` the units are ``sum eps^n/(4n+j)^m`` and go
straight to polygamma values.  For ``k != 0`` the unit ``U(j, m)`` is

    sum_{n >= n0(j)} a_n^k / (2n+j)^m,

with ``n0(j)`` the first index past the pole.  Divergent units (``k < 0``, small
``m``) stand for the finite part of their partial sums at a common cutoff; that
is linear, so any convergent combination of them evaluates correctly.

Telescoping ``T(n) = a_n^k/(2n+j-2)^m`` gives, for every ``(j, m)``,

    sum_{n>=n1} a_n^k [rho^k/(2n+j)^m - 1/(2n+j-2)^m] = CT - T(n1),
    rho = (2n+1)/(2n+2),

where ``CT = pi/2`` for ``k=-2, m=1`` and 0 otherwise.  Expanding ``rho^k/(2n+j)^m``
in partial fractions turns each such identity into a linear relation between
units; these move every pole onto the base poles ``{1, 2}`` (``k > 0``) or
``{0, 1}`` (``k < 0``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .core import PI, ClosedForm, GaussianRational
from .errors import DivergentError, PoleError, UnmatchedShapeError
from .gamma_engine import base_sum_k1, polygamma
from .poly import Poly, RationalFunction
from .series import (
    SeriesSpec, check_convergence, partial_fractions, pfq_to_binom,
)

__all__ = ["reduce", "ReductionTrace", "TraceStep", "SumState", "check_convergence",
           "partial_fractions", "unit_label", "relation", "a_n", "normalize", "unit_spec"]

RULES = ("PF", "R1", "R2", "R1'", "R2'", "PAIR", "BASE", "INIT-TERMS")


def a_n(n: int) -> Fraction:
    """binom(2n, n) / 4^n, exact."""
    a = Fraction(1)
    for i in range(n):
        a *= Fraction(2 * i + 1, 2 * i + 2)
    return a


def _n0(j: int) -> int:
    return -j // 2 + 1 if j % 2 == 0 and j <= 0 else 0


# ---------------------------------------------------------------------------
# states and trace

def unit_label(u, k) -> str:
    kind = u[0]
    if kind == "H":
        _, j, m, eps, start = u
        sgn = "(-1)^n " if eps == -1 else ""
        return f"S[{sgn}1/(4n+{j})^{m}, n>={start}]"
    if kind == "S":
        _, j, m, start = u
        return f"S[a^{k}/(2n+{j})^{m}, n>={start}]"
    if kind == "U":
        _, j, m = u
        return f"U({j},{m})"
    if kind == "SERIES":
        return "S"
    return {"V": "V[1/(2n(2n+1))]", "VA": "V[1/(2n(2n+1)^2)]",
            "VB": "V[1/((2n)^2(2n+1))]"}[kind]


@dataclass
class SumState:
    """``const + sum coeff[u] * unit(u)``."""

    k: int
    units: dict = field(default_factory=dict)
    const: ClosedForm = field(default_factory=ClosedForm)

    def copy(self) -> "SumState":
        return SumState(self.k, dict(self.units), self.const)

    def add(self, u, c):
        c = GaussianRational.coerce(c)
        v = self.units.get(u, GaussianRational(0)) + c
        if v.is_zero():
            self.units.pop(u, None)
        else:
            self.units[u] = v

    def substitute(self, u, combo: dict, const: ClosedForm):
        """Replace ``unit(u)`` by ``sum combo + const``."""
        c = self.units.pop(u, None)
        if c is None:
            return
        for v, d in combo.items():
            self.add(v, c * d)
        self.const = self.const + const.scale(c)

    def __str__(self):
        parts = [f"({c})*{unit_label(u, self.k)}" for u, c in sorted(self.units.items(), key=str)]
        if not self.const.is_zero() or not parts:
            parts.append(f"({self.const})")
        return " + ".join(parts)


@dataclass
class TraceStep:
    rule: str
    detail: str
    before: str
    after: str
    subs: list = field(default_factory=list)  # [(unit, combo, const), ...]
    correction: Fraction | GaussianRational = Fraction(0)
    measure: int | None = None


@dataclass
class ReductionTrace:
    steps: list = field(default_factory=list)
    initial: SumState | None = None
    pi_prefactor: bool = False

    def replay(self) -> ClosedForm:
        """Apply every recorded substitution to the initial state and return the value."""
        st = self.initial.copy()
        for step in self.steps:
            for u, combo, const in step.subs:
                st.substitute(u, combo, const)
        if st.units:
            raise ValueError(f"units left after replay: {list(st.units)}")
        out = st.const
        if self.pi_prefactor:
            out = out * ClosedForm.atom(PI)
        return out.canonical()

    def rules(self):
        return [s.rule for s in self.steps]

    def to_json(self):
        return [{"rule": s.rule, "detail": s.detail, "before": s.before, "after": s.after,
                 "correction": str(s.correction), "measure": s.measure} for s in self.steps]

    def __str__(self):
        lines = []
        for i, s in enumerate(self.steps, 1):
            extra = f"  [measure {s.measure}]" if s.measure is not None else ""
            corr = f"  correction {s.correction}" if s.correction else ""
            lines.append(f"{i:3d} {s.rule:<10} {s.detail}{extra}{corr}")
            lines.append(f"      -> {s.after}")
        return "\n".join(lines)


class _Recorder:
    def __init__(self, state: SumState, trace: ReductionTrace):
        self.state = state
        self.trace = trace

    def apply(self, rule, detail, subs, correction=Fraction(0), measure=None):
        before = str(self.state)
        for u, combo, const in subs:
            self.state.substitute(u, combo, const)
        self.trace.steps.append(TraceStep(rule, detail, before, str(self.state), list(subs),
                                          correction, measure))


# ---------------------------------------------------------------------------
# the unit relations

def _rho_power(k: int) -> RationalFunction:
    rho = RationalFunction(Poly([1, 2]), Poly([2, 2]))
    return rho ** k


def _unit_head(k, j, m, lo, hi) -> Fraction:
    """sum_{lo <= n < hi} a_n^k/(2n+j)^m."""
    return sum((a_n(n) ** k / Fraction(2 * n + j) ** m for n in range(lo, hi)), Fraction(0))


def relation(k: int, j: int, m: int):
    """The telescoping identity for ``(j, m)`` as ``(coeffs, const)`` with
    ``sum coeffs[U] * U == const``."""
    n1 = max(_n0(j), _n0(j - 2))
    rf = _rho_power(k) * RationalFunction(Poly([1]), Poly([j, 2]) ** m)
    pf = partial_fractions(rf, 2)
    assert pf.poly_part.is_zero()
    coeffs: dict = {}

    def add(u, c):
        coeffs[u] = coeffs.get(u, GaussianRational(0)) + c

    const = ClosedForm()
    if k == -2 and m == 1:
        const = ClosedForm.atom(PI, coeff=Fraction(1, 2))
    const = const - ClosedForm.const(a_n(n1) ** k / Fraction(2 * n1 + j - 2) ** m)
    for c, _d, jj, mm in pf.terms:
        add(("U", jj, mm), c)
        const = const + ClosedForm.const(c * _unit_head(k, jj, mm, _n0(jj), n1))
    add(("U", j - 2, m), GaussianRational(-1))
    const = const - ClosedForm.const(_unit_head(k, j - 2, m, _n0(j - 2), n1))
    return {u: c for u, c in coeffs.items() if not c.is_zero()}, const


def _solve_for(u, coeffs, const):
    """Rewrite ``sum coeffs U = const`` as ``U_u = combo + c``."""
    a = coeffs[u]
    combo = {v: -c / a for v, c in coeffs.items() if v != u}
    return combo, const.scale(1 / a)


def _base_poles(k):
    return (1, 2) if k > 0 else (0, 1)


def _level(k, j) -> int:
    return abs(2 * j - 3) if k > 0 else abs(2 * j - 1)


def _measure(state: SumState) -> int:
    base = _base_poles(state.k)
    poles = {u[1] for u in state.units if u[0] == "U" and u[1] not in base}
    return sum(_level(state.k, j) for j in poles)


def _eliminate_level(rec: _Recorder, j: int):
    k = rec.state.k
    up = j > max(_base_poles(k))
    rule = ("R1" if up else "R2") + ("'" if k < 0 else "")
    subs = []
    while True:
        ms = sorted((u[2] for u in rec.state.units if u[0] == "U" and u[1] == j), reverse=True)
        if not ms:
            break
        m = ms[0]
        if up:
            # for k<0 the pole 2 sits on a zero of rho^k: shift the multiplicity
            mm = m - k if (k < 0 and j == 2) else m
            coeffs, const = relation(k, j, mm)
        else:
            coeffs, const = relation(k, j + 2, m)
        u = ("U", j, m)
        assert u in coeffs, (u, coeffs)
        combo, c = _solve_for(u, coeffs, const)
        rec.state.substitute(u, combo, c)
        subs.append((u, combo, c))
    return rule, subs


# ---------------------------------------------------------------------------
# k = 0

def _hurwitz_reg(m: int, x: Fraction) -> ClosedForm:
    """Finite part of sum_{t>=0} 1/(t+x)^m, i.e. (-1)^m psi^(m-1)(x)/(m-1)!."""
    return polygamma(m - 1, x).scale(Fraction((-1) ** m, factorial(m - 1)))


def _k0_unit_value(j, m, eps, start) -> ClosedForm:
    """sum_{n>=start} eps^n/(4n+j)^m (finite part when divergent)."""
    y = start + Fraction(j, 4)
    scale = Fraction(1, 4 ** m)
    if eps == 1:
        return _hurwitz_reg(m, y).scale(scale)
    if (y / 2).denominator not in (1, 2, 4):
        raise PoleError(f"alternating sum with pole at n={-Fraction(j, 4)} needs polygamma at "
                        f"{y / 2}, outside denominators 1, 2, 4")
    diff = _hurwitz_reg(m, y / 2) - _hurwitz_reg(m, (y + 1) / 2)
    return diff.scale(scale * Fraction(1, 2 ** m) * (-1) ** start)


def _reduce_k0(s: SeriesSpec, rec: _Recorder):
    pf = partial_fractions(s.R, 4)
    if not pf.poly_part.is_zero():
        raise DivergentError("polynomial part does not vanish")
    subs = [(("SERIES",), {("H", j, m, s.sign, s.start): c for c, _d, j, m in pf.terms},
             ClosedForm())]
    rec.apply("PF", f"R(n) over poles in Z/4: {len(pf.terms)} terms", subs)
    subs = []
    for u in list(rec.state.units):
        _, j, m, eps, start = u
        subs.append((u, {}, _k0_unit_value(j, m, eps, start)))
    rec.apply("BASE", "polygamma values", subs)


# ---------------------------------------------------------------------------
# k != 0

def unit_spec(k: int, u) -> SeriesSpec:
    """The convergent series a (base or pair) unit stands for."""
    from .basetable import unit_series
    if u[0] == "U":
        _, j, m = u
        R = RationalFunction(Poly([1]), Poly([j, 2]) ** m)
        return SeriesSpec("binom", k=k, R=R, start=_n0(j))
    fam = {"V": "pair", "VA": "pairA", "VB": "pairB"}[u[0]]
    return unit_series(k, fam, {"pair": 2}.get(fam, 3))

def _base_value(k, u, table) -> ClosedForm:
    _, j, m = u
    if k == 1:
        return base_sum_k1(2, j, m)
    if k == 2:
        fam = "odd" if j == 1 else "even"
        return table.lookup(2, fam, m) * ClosedForm.atom(PI, power=-1)
    fam = "odd" if j == 1 else "even"
    v = table.lookup(k, fam, m)
    return v if j == 1 else v.scale(Fraction(1, 2 ** m))


def _pair(rec: _Recorder, table):
    """Trade divergent base units for convergent pair units."""
    k = rec.state.k
    st = rec.state
    g = lambda u: st.units.get(u, GaussianRational(0))  # noqa: E731
    one = ClosedForm.const(1)
    if k == -1:
        if g(("U", 1, 1)).is_zero() and g(("U", 0, 1)).is_zero():
            return
        # U(1,1) - U(0,1) = 1 - V
        subs = [(("U", 1, 1), {("U", 0, 1): GaussianRational(1), ("V",): GaussianRational(-1)}, one)]
        rec.apply("PAIR", "U(1,1) = U(0,1) + 1 - V", subs)
        if not g(("U", 0, 1)).is_zero():
            raise DivergentError("divergent units do not cancel")
    elif k == -2:
        if all(g(("U", j, m)).is_zero() for j in (0, 1) for m in (1, 2)):
            return
        U = lambda j, m: ("U", j, m)  # noqa: E731
        c1 = GaussianRational(1)
        subs = [(U(0, 2), {("VB",): c1, U(1, 1): -c1, U(0, 1): c1}, one),
                (U(1, 2), {U(1, 1): -c1, U(0, 1): c1, ("VA",): -c1}, ClosedForm.const(2))]
        rec.apply("PAIR", "U(0,2) = VB - U(1,1) + U(0,1) + 1; U(1,2) = 2 - U(1,1) + U(0,1) - VA", subs)
        if not (g(U(1, 1)).is_zero() and g(U(0, 1)).is_zero()):
            raise DivergentError("divergent units do not cancel")


def _normalize_knz(s: SeriesSpec, rec: _Recorder, table):
    k = s.k
    if s.sign != 1:
        raise UnmatchedShapeError("alternating sums are reduced only for k = 0")
    pf = partial_fractions(s.R, 2)
    if not pf.poly_part.is_zero():
        raise DivergentError("polynomial part does not vanish")
    rec.apply("PF", f"R(n) over poles in Z/2: {len(pf.terms)} terms",
              [(("SERIES",), {("S", j, m, s.start): c for c, _d, j, m in pf.terms}, ClosedForm())])
    # move every unit to its natural start n0(j)
    subs = []
    total = GaussianRational(0)
    for u in list(rec.state.units):
        _, j, m, start = u
        head = _unit_head(k, j, m, _n0(j), start)
        subs.append((u, {("U", j, m): GaussianRational(1)}, ClosedForm.const(-head)))
        total = total - rec.state.units[u] * head
    rec.apply("INIT-TERMS", f"reindex to natural starts (start={s.start})", subs, correction=total)
    base = _base_poles(k)
    while True:
        poles = {u[1] for u in rec.state.units if u[0] == "U" and u[1] not in base}
        if not poles:
            break
        j = max(poles, key=lambda p: (_level(k, p), p))
        before, before_text = _measure(rec.state), str(rec.state)
        rule, subs = _eliminate_level(rec, j)
        after = _measure(rec.state)
        assert after < before, (before, after)
        rec.trace.steps.append(TraceStep(rule, f"pole level j={j}", before_text, str(rec.state),
                                         subs, measure=after))
    if k < 0:
        _pair(rec, table)


def _apply_base(rec: _Recorder, table):
    k = rec.state.k
    subs = []
    for u in list(rec.state.units):
        if u[0] == "U":
            subs.append((u, {}, _base_value(k, u, table)))
        else:
            fam, m = {"V": ("pair", 2), "VA": ("pairA", 3), "VB": ("pairB", 3)}[u[0]]
            subs.append((u, {}, table.lookup(k, fam, m)))
    rec.apply("BASE", "base sums", subs)


# ---------------------------------------------------------------------------

def _start(s: SeriesSpec):
    conv = check_convergence(s)
    if conv.status == "terminating":
        from .errors import TerminatingError
        raise TerminatingError("series terminates")
    if not conv.ok:
        raise DivergentError(f"series diverges (excess {conv.rate})")
    trace = ReductionTrace(pi_prefactor=s.pi_prefactor)
    init_steps = []
    if s.form == "pfq":
        b = pfq_to_binom(s)
        init_steps.append(TraceStep("INIT-TERMS", "pFq to binomial form", str(s), str(b)))
        s = b
    state = SumState(s.k, {("SERIES",): GaussianRational(1)})
    trace.initial = state.copy()
    trace.steps.extend(init_steps)
    return s, _Recorder(state, trace)


def normalize(s: SeriesSpec):
    """The unit state just before base values are substituted (k != 0).

    Units left are ``("U", j, m)`` on the base poles and the pair units
    ``("V",)``, ``("VA",)``, ``("VB",)``; all of them converge.
    """
    s, rec = _start(s)
    if s.k == 0:
        raise ValueError("k = 0 has no unit normalization")
    _normalize_knz(s, rec, None)
    return rec.state, rec.trace


def reduce(s: SeriesSpec, table=None):
    """Closed form of an admissible series, with the trace of rewrites."""
    s, rec = _start(s)
    trace = rec.trace
    if s.k == 0:
        _reduce_k0(s, rec)
    else:
        if table is None:
            from .basetable import default_table
            table = default_table()
        _normalize_knz(s, rec, table)
        _apply_base(rec, table)
    assert not rec.state.units
    out = rec.state.const
    if s.pi_prefactor:
        out = out * ClosedForm.atom(PI)
    return out.canonical(), trace
