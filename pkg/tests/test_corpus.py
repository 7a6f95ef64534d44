import json

import pytest

from hyp2mzv.corpus import IdentityDB, IdentityRecord, check_identity
from hyp2mzv.errors import UnknownIdError

DB = IdentityDB.load()


def test_corpus_shape():
    assert len(DB) == 26
    assert DB.ids() == sorted(DB.ids())


@pytest.mark.parametrize("rid", DB.ids())
def test_records_reparse(rid):
    rec = DB.get(rid)
    rec.validate()
    assert rec.source.startswith("PAPER-")
    assert rec.weight > 0


def test_unknown_id():
    with pytest.raises(UnknownIdError, match="nonexistent"):
        DB.get("nonexistent")


def test_save_is_sorted_lf_and_round_trips(tmp_path):
    p = tmp_path / "db.jsonl"
    DB.save(p)
    raw = p.read_bytes()
    assert b"\r" not in raw
    ids = [json.loads(line)["id"] for line in raw.decode().splitlines()]
    assert ids == sorted(ids)
    again = IdentityDB.load(p)
    assert [r.to_json() for r in again] == [r.to_json() for r in DB]


def test_mark_verified_sets_timestamp(tmp_path):
    p = tmp_path / "db.jsonl"
    DB.save(p)
    db = IdentityDB.load(p)
    db.mark_verified("prop1-ex2", 30)
    rec = db.get("prop1-ex2")
    assert rec.verifiedDigits == 30 and rec.verifiedAt.endswith("Z")
    rec.validate()
    db.mark_verified("prop1-ex2", 20)  # never lowers
    assert db.get("prop1-ex2").verifiedDigits == 30


def test_validate_rejects_missing_timestamp():
    rec = IdentityRecord("x", "pfq(1,1,1;2,2;1)", "pi^2/6", "PAPER-x", 2, verifiedDigits=5)
    with pytest.raises(ValueError):
        rec.validate()


def test_check_identity():
    out = check_identity("pfq(1,1,1;2,2;1)", "pi^2/6", 30)
    assert out["pass"] and out["tolerance"] == "1e-25"
    bad = check_identity("pfq(1,1,1;2,2;1)", "pi^2/6 + 1/10^20", 30)
    assert not bad["pass"]
