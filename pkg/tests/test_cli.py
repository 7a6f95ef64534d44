import json

import pytest
from click.testing import CliRunner

from hyp2mzv.cli import main
from hyp2mzv.corpus import IdentityDB
from hyp2mzv.parser import parse_closedform


def run(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env or {}, catch_exceptions=False)


def js(*args, env=None):
    r = run("--format", "json", *args, env=env)
    return r.exit_code, json.loads(r.output.strip().splitlines()[-1])


def test_reduce_text_round_trips():
    r = run("reduce", "binom(1; 1/(2n+1))")
    assert r.exit_code == 0
    assert parse_closedform(r.output.strip()) == parse_closedform("pi/2")


def test_reduce_divergent():
    code, out = js("reduce", "pfq(1,1;2;1)")
    assert code == 3 and out["reason"] == "DIVERGENT" and out["status"] == "error"


def test_reduce_trace():
    r = run("reduce", "--trace", "binom(1; 1/(2n+3))")
    assert r.exit_code == 0
    for rule in ("PF", "R1", "BASE"):
        assert rule in r.output
    code, out = js("reduce", "--trace", "binom(1; 1/(2n+3))")
    assert [s["rule"] for s in out["trace"]] == ["PF", "INIT-TERMS", "R1", "BASE"]


def test_parse_error_exit_code():
    code, out = js("reduce", "pfq(1,1;2")
    assert code == 2


def test_reduction_miss_exit_code(tmp_path):
    empty = tmp_path / "t.jsonl"
    empty.write_text("")
    code, out = js("--table", str(empty), "reduce", "binom(-1; 1/(2n+1)^3)")
    assert code == 4 and out["reason"] == "REDUCTION_MISS"


def test_eval_series_and_closed_form():
    code, out = js("eval", "--prec", "30", "pfq(1/2,1/2;3/2;1)")
    assert code == 0 and out["value"].startswith("1.57079632679489661923132169")
    code, out = js("eval", "pi^2/6")
    assert code == 0 and out["value"].startswith("1.644934066848226436472415166")


def test_prec_from_environment():
    code, out = js("eval", "log2", env={"HYP2MZV_PREC": "12"})
    assert out["digits"] == 12


def test_verify_one():
    code, out = js("verify", "--id", "lemma1-ex1", "--prec", "40")
    assert code == 0 and out["passed"] == 1
    assert float(out["results"][0]["residual"]) < 1e-35


def test_verify_unknown_id():
    code, out = js("verify", "--id", "nonexistent")
    assert code == 2 and out["reason"] == "UNKNOWN_ID"


def test_verify_all_parallel_and_record(tmp_path):
    db = IdentityDB.load()
    small = IdentityDB([db.get("prop1-ex2"), db.get("thm1-ex2")], tmp_path / "db.jsonl")
    small.save()
    code, out = js("--db", str(small.path), "verify", "--all", "--jobs", "2", "--prec", "30", "--record")
    assert code == 0 and out["passed"] == 2
    assert [r["id"] for r in out["results"]] == ["prop1-ex2", "thm1-ex2"]
    again = IdentityDB.load(small.path)
    assert again.get("thm1-ex2").verifiedDigits == 30
    assert (tmp_path / "atom_cache.jsonl").exists()


def test_verify_failure_exit(tmp_path):
    p = tmp_path / "db.jsonl"
    p.write_text(json.dumps({"id": "bad", "lhs": "pfq(1,1,1;2,2;1)", "rhs": "pi^2/6 + 1/10^20",
                             "source": "FITTED", "weight": 2}) + "\n")
    code, out = js("--db", str(p), "verify", "--all", "--prec", "30")
    assert code == 5 and out["passed"] == 0


@pytest.mark.parametrize("expr,weight,expect", [
    ("binom(-1; 1/n^2; start=1)", "2", "pi^2/2"),
    ("pfq(1/2,1/2;3/2;1)", "1", "pi/2"),
])
def test_fit(expr, weight, expect):
    code, out = js("fit", expr, "--weight", weight, "--level", "2")
    assert code == 0
    assert parse_closedform(out["closed_form"]) == parse_closedform(expect).canonical()


def test_fit_reports_precision_advice():
    code, out = js("fit", "binom(1; 1/(2n+1)^3)", "--weight", "4", "--mixed", "--prec", "20")
    assert code == 5
    assert "--prec" in out["message"]


def test_fl_check():
    code, out = js("fl-check")
    assert code == 0 and out["orthogonality"] < 1e-12 and out["parseval_residual"] < 1e-8


def test_table_build_single_key(tmp_path):
    dest = tmp_path / "table.jsonl"
    code, out = js("table-build", "--out", str(dest), "--key", "-1,even,2", "--digits", "30")
    assert code == 0 and dest.exists()
    lines = [json.loads(line) for line in dest.read_text().splitlines()]
    keys = {tuple(e["key"]) for e in lines}
    assert (-1, "even", 2) in keys
    assert sum(e["provenance"] == "PAPER" for e in lines) == 5
