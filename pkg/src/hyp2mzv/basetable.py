"""Certified closed forms of the base sums for k = -2, -1, 2.

Families (``a_n = binom(2n,n)/4^n``):

    odd    sum_{n>=0} a_n^k/(2n+1)^m
    even   sum_{n>=0} a_n^2/(2n+2)^m for k = 2, sum_{n>=1} a_n^k/n^m for k < 0
    pair   sum_{n>=1} a_n^-1/(2n(2n+1))                (m = 2)
    pairA  sum_{n>=1} a_n^-2/(2n(2n+1)^2)              (m = 3)
    pairB  sum_{n>=1} a_n^-2/((2n)^2(2n+1))            (m = 3)

For k = 2 the stored value is pi times the sum.
"""
from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .core import ClosedForm
from .errors import ReductionMiss

__all__ = ["BaseTable", "BaseEntry", "unit_series", "default_table", "FAMILIES",
           "populate_base_table", "entry_from_identity", "PAPER_SOURCES",
           "FIT_KEYS", "build_table"]

FAMILIES = ("odd", "even", "pair", "pairA", "pairB")

_UNIT_TEXT = {
    "odd": "binom({k}; 1/(2n+1)^{m})",
    "even": None,
    "pair": "binom(-1; 1/(2n(2n+1)); start=1)",
    "pairA": "binom(-2; 1/(2n(2n+1)^2); start=1)",
    "pairB": "binom(-2; 1/((2n)^2(2n+1)); start=1)",
}


def unit_series(k: int, family: str, m: int):
    """The SeriesSpec whose value a table entry records."""
    from .parser import parse_series
    if family == "even":
        text = f"binom({k}; 1/(2n+2)^{m})" if k > 0 else f"binom({k}; 1/n^{m}; start=1)"
    else:
        text = _UNIT_TEXT[family].format(k=k, m=m)
    if k == 2:
        text = "pi*" + text
    return parse_series(text)


@dataclass(frozen=True)
class BaseEntry:
    k: int
    family: str
    m: int
    value: ClosedForm
    provenance: str  # "PAPER" or "FITTED"
    digits: int = 0

    @property
    def key(self):
        return (self.k, self.family, self.m)

    def to_json(self) -> dict:
        return {"key": [self.k, self.family, self.m], "closed_form": str(self.value),
                "provenance": self.provenance, "digits": self.digits}

    @classmethod
    def from_json(cls, rec: dict) -> "BaseEntry":
        from .parser import parse_closedform
        k, fam, m = rec["key"]
        return cls(int(k), fam, int(m), parse_closedform(rec["closed_form"]),
                   rec["provenance"], int(rec.get("digits", 0)))


class BaseTable:
    def __init__(self, entries=()):
        self.entries: dict = {}
        self._lock = threading.Lock()
        for e in entries:
            self.entries[e.key] = e

    def lookup(self, k: int, family: str, m: int) -> ClosedForm:
        e = self.entries.get((k, family, m))
        if e is None:
            raise ReductionMiss((k, family, m))
        return e.value

    def add(self, entry: BaseEntry):
        with self._lock:
            old = self.entries.get(entry.key)
            if old is not None and old.provenance == "PAPER" and entry.provenance != "PAPER":
                return
            self.entries[entry.key] = entry

    def __contains__(self, key):
        return tuple(key) in self.entries

    def __len__(self):
        return len(self.entries)

    @classmethod
    def load(cls, path) -> "BaseTable":
        entries = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    entries.append(BaseEntry.from_json(json.loads(line)))
        return cls(entries)

    def save(self, path):
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for key in sorted(self.entries, key=lambda t: (t[0], t[1], t[2])):
                fh.write(json.dumps(self.entries[key].to_json()) + "\n")


_default = None


def default_table() -> BaseTable:
    global _default
    if _default is None:
        ref = resources.files("hyp2mzv") / "data" / "base_table.jsonl"
        _default = BaseTable.load(ref) if ref.is_file() else BaseTable()
    return _default


def entry_weight(k: int, family: str, m: int) -> int:
    return m + 1 if k == 2 else m


def entry_level(k: int, family: str) -> int:
    return 2 if (k == -1 and family in ("even", "pair")) else 4


def populate_base_table(k: int, family: str, m: int, digits: int = 60, table=None,
                        height: int = 10 ** 5) -> BaseEntry:
    """Fit the entry ``(k, family, m)`` against the atom basis and store it.

    Tries the homogeneous basis of the entry's weight first, then all lower
    weights too.  The relation is re-checked at 1.5x the fitting precision.
    """
    from .atoms import digits_cap
    from .errors import NoRelation, PrecisionError
    from .fitter import fit, mixed_basis, monomial_basis, precision_budget
    from .oracle import eval_series
    if k not in (-2, -1, 2) or family not in FAMILIES:
        raise ValueError(f"no table family {(k, family)}")
    spec = unit_series(k, family, m)
    w, lv = entry_weight(k, family, m), entry_level(k, family)
    cache: dict = {}

    def value(d):
        if d not in cache:
            cache[d] = eval_series(spec, d)
        return cache[d]

    last = None
    for basis in (monomial_basis(w, lv), mixed_basis(w, lv)):
        need = max(digits, precision_budget(len(basis), height))
        try:
            with digits_cap(int(need * 1.5) + 30):
                form = fit(value, basis, height_bound=height, digits=need)
        except (NoRelation, PrecisionError) as exc:
            last = exc
            continue
        entry = BaseEntry(k, family, m, form, "FITTED", need)
        if table is not None:
            table.add(entry)
        return entry
    raise last


# corpus identities whose left side normalizes to a single base unit
PAPER_SOURCES = {
    "lemma2-ex1": (-1, "even", 8),
    "lemma3-ex1": (-1, "odd", 5),
    "lemma4-ex2": (2, "odd", 4),
    "lemma5-ex1": (-2, "even", 5),
    "lemma5-ex2": (-2, "odd", 5),
}


def entry_from_identity(lhs: str, rhs: str, provenance: str = "PAPER") -> BaseEntry:
    """Solve a known identity for the one base unit its left side normalizes to."""
    from .core import PI
    from .parser import parse_closedform, parse_series
    from .reducer import normalize
    spec = parse_series(lhs)
    state, _ = normalize(spec)
    units = [(u, c) for u, c in state.units.items() if not c.is_zero()]
    if len(units) != 1 or units[0][0][0] != "U":
        raise ValueError(f"{lhs} does not normalize to a single base unit: {state}")
    (_, j, m), c = units[0]
    k = state.k
    target = parse_closedform(rhs)
    if spec.pi_prefactor:
        target = target * ClosedForm.atom(PI, power=-1)
    unit = ((target - state.const) / c).canonical()
    if k == 2:
        family, value = ("odd" if j == 1 else "even"), unit * ClosedForm.atom(PI)
    elif j == 1:
        family, value = "odd", unit
    else:
        family, value = "even", unit.scale(2 ** m)
    return BaseEntry(k, family, m, value.canonical(), provenance)


# (k, family, m, height) fitted by table-build; weight-5 level-4 entries come from PAPER_SOURCES
FIT_KEYS = (
    [(-1, "pair", 2, 10 ** 5)]
    + [(-1, "odd", m, 10 ** 5) for m in (2, 3, 4)]
    + [(-1, "even", m, 10 ** 5) for m in (2, 3, 4, 5)]
    + [(-1, "even", 6, 10 ** 8)]
    + [(-2, f, m, 10 ** 5) for f in ("odd", "even") for m in (3, 4)]
    + [(-2, "pairA", 3, 10 ** 5), (-2, "pairB", 3, 10 ** 5)]
    + [(2, f, m, 10 ** 5) for f in ("odd", "even") for m in (1, 2, 3)]
)


def build_table(records=(), fit_keys=FIT_KEYS, digits: int = 60, table=None, log=None) -> BaseTable:
    """Collect PAPER entries from identity records, then fit the remaining keys.

    ``records`` are dicts with ``id``, ``lhs``, ``rhs``.  A fitted key already
    present is skipped.  ``log`` receives one line per entry.
    """
    table = table if table is not None else BaseTable()
    for rec in records:
        if rec["id"] in PAPER_SOURCES:
            e = entry_from_identity(rec["lhs"], rec["rhs"])
            table.add(e)
            if log:
                log(f"{e.key} PAPER {rec['id']}")
    for k, fam, m, height in fit_keys:
        if (k, fam, m) in table:
            continue
        e = populate_base_table(k, fam, m, digits=digits, table=table, height=height)
        if log:
            log(f"{e.key} FITTED at {e.digits} digits")
    return table
