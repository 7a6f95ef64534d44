import mpmath
import pytest

from hyp2mzv.atoms import digits_cap, eval_closedform
from hyp2mzv.basetable import (
    PAPER_SOURCES, BaseEntry, BaseTable, default_table, entry_from_identity, entry_level,
    populate_base_table, unit_series,
)
from hyp2mzv.core import EULER_GAMMA
from hyp2mzv.corpus import IdentityDB
from hyp2mzv.errors import ReductionMiss
from hyp2mzv.oracle import eval_series
from hyp2mzv.parser import parse_closedform

TABLE = default_table()
ENTRIES = sorted(TABLE.entries.values(), key=lambda e: e.key)


def key_id(e):
    return f"{e.k},{e.family},{e.m}"


def test_table_loaded():
    assert len(TABLE) >= 26
    assert {e.provenance for e in ENTRIES} == {"PAPER", "FITTED"}


@pytest.mark.parametrize("entry", [e for e in ENTRIES if e.provenance == "FITTED"], ids=key_id)
def test_fitted_entry_against_oracle_at_1p5x(entry):
    d = int(entry.digits * 1.5)
    with digits_cap(d + 40):
        ref = eval_series(unit_series(*entry.key), d)
        got = eval_closedform(entry.value, d)
    with mpmath.workdps(d + 10):
        assert abs(ref.mid - got.mid) < mpmath.mpf(10) ** -(d - 5)


@pytest.mark.parametrize("rid", sorted(PAPER_SOURCES))
def test_paper_entries_match_corpus(rid):
    rec = IdentityDB.load().get(rid)
    e = entry_from_identity(rec.lhs, rec.rhs)
    assert e.key == PAPER_SOURCES[rid]
    assert TABLE.entries[e.key].value == e.value
    assert TABLE.entries[e.key].provenance == "PAPER"


@pytest.mark.parametrize("entry", ENTRIES, ids=key_id)
def test_level_discipline_and_gamma_free(entry):
    atoms = entry.value.atoms()
    assert EULER_GAMMA not in atoms
    assert max((a.level for a in atoms), default=1) <= entry_level(entry.k, entry.family)


def test_arcsin_squared_entry():
    assert TABLE.lookup(-1, "even", 2) == parse_closedform("pi^2/2").canonical()


def test_populate_small_entry():
    t = BaseTable()
    e = populate_base_table(-1, "even", 2, digits=30, table=t)
    assert e.provenance == "FITTED" and e.value == parse_closedform("pi^2/2").canonical()
    assert (-1, "even", 2) in t


def test_paper_entry_not_overwritten_by_fit():
    t = BaseTable([BaseEntry(-1, "even", 2, parse_closedform("pi^2/2"), "PAPER")])
    t.add(BaseEntry(-1, "even", 2, parse_closedform("5"), "FITTED", 10))
    assert t.entries[(-1, "even", 2)].provenance == "PAPER"


def test_json_round_trip(tmp_path):
    p = tmp_path / "t.jsonl"
    TABLE.save(p)
    again = BaseTable.load(p)
    assert again.entries == TABLE.entries
    text = p.read_text()
    TABLE.save(p)
    assert p.read_text() == text
    assert "\r" not in text


def test_miss_reports_key():
    with pytest.raises(ReductionMiss) as ei:
        BaseTable().lookup(-2, "odd", 7)
    assert ei.value.key == (-2, "odd", 7)
