"""hyp2mzv command line.

Options resolve as flag > ``HYP2MZV_*`` environment variable > default.
Exit codes: 0 ok, 2 parse / unknown id, 3 divergent or terminating,
4 no reduction, 5 verification or fit failure.
"""
from __future__ import annotations

import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import click
import mpmath

from .errors import Hyp2MzvError, NoRelation, PrecisionError

DEFAULT_PREC = 40


def _emit(ctx, payload: dict, text: str):
    if ctx.obj["format"] == "json":
        click.echo(json.dumps(payload, ensure_ascii=False))
    else:
        click.echo(text)


def _fail(ctx, exc: Exception):
    code = getattr(exc, "exit_code", 1)
    reason = getattr(exc, "reason", "ERROR")
    payload = {"status": "error", "reason": reason, "message": str(exc)}
    if ctx.obj["format"] == "json":
        click.echo(json.dumps(payload, ensure_ascii=False))
    else:
        click.echo(f"error [{reason}]: {exc}", err=True)
    ctx.exit(code)


def _setup_cache(cache, db):
    from . import atoms
    path = cache
    if path is None and db is not None:
        path = Path(db).with_name("atom_cache.jsonl")
    if path is not None:
        atoms.set_cache(atoms.AtomCache(path))


_prec = click.option("--prec", type=int, default=DEFAULT_PREC, envvar="HYP2MZV_PREC",
                     show_default=True, help="decimal digits")
_fmt = click.option("--format", "fmt", type=click.Choice(["text", "json"]), default=None,
                    help="output format (overrides the global flag)")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              envvar="HYP2MZV_FORMAT", show_default=True)
@click.option("--db", type=click.Path(dir_okay=False), envvar="HYP2MZV_DB", default=None,
              help="identity database (JSON lines); defaults to the bundled corpus")
@click.option("--cache", type=click.Path(dir_okay=False), envvar="HYP2MZV_ATOM_CACHE", default=None,
              help="atom value cache; defaults to a file next to --db")
@click.option("--table", type=click.Path(dir_okay=False), envvar="HYP2MZV_TABLE", default=None,
              help="base table (JSON lines); defaults to the bundled table")
@click.pass_context
def main(ctx, fmt, db, cache, table):
    """Reduce, evaluate and verify hypergeometric and central-binomial series."""
    ctx.ensure_object(dict)
    ctx.obj.update(format=fmt, db=db, table=table)
    _setup_cache(cache, db)


def _override_format(ctx, fmt):
    if fmt:
        ctx.obj["format"] = fmt


def _load_table(ctx):
    from .basetable import BaseTable, default_table
    return BaseTable.load(ctx.obj["table"]) if ctx.obj["table"] else default_table()


@main.command()
@click.argument("expr")
@click.option("--trace", is_flag=True, help="print the rewrite steps")
@_fmt
@click.pass_context
def reduce(ctx, expr, trace, fmt):
    """Closed form of a series."""
    from .parser import parse_series
    from .reducer import reduce as do_reduce
    _override_format(ctx, fmt)
    try:
        form, tr = do_reduce(parse_series(expr), table=_load_table(ctx))
    except Hyp2MzvError as exc:
        _fail(ctx, exc)
        return
    payload = {"status": "ok", "input": expr, "closed_form": str(form)}
    text = str(form)
    if trace:
        payload["trace"] = tr.to_json()
        text = f"{tr}\n= {form}"
    _emit(ctx, payload, text)


@main.command("eval")
@click.argument("expr")
@_prec
@_fmt
@click.pass_context
def eval_cmd(ctx, expr, prec, fmt):
    """Certified decimal value of a series or a closed form."""
    from .atoms import eval_closedform
    from .errors import ParseError
    from .oracle import eval_series
    from .parser import parse_closedform, parse_series
    _override_format(ctx, fmt)
    try:
        try:
            val = eval_series(parse_series(expr), prec)
        except ParseError:
            val = eval_closedform(parse_closedform(expr), prec)
    except Hyp2MzvError as exc:
        _fail(ctx, exc)
        return
    with mpmath.workdps(prec + 10):
        digits = val.digits() if val.rad > 0 else prec
        shown = mpmath.nstr(val.mid, min(prec, max(digits, 1)))
        payload = {"status": "ok", "input": expr, "value": shown,
                   "radius": mpmath.nstr(val.rad, 3), "digits": int(min(digits, prec))}
    _emit(ctx, payload, shown)


def _verify_one(args):
    rid, lhs, rhs, prec = args
    from .corpus import check_identity
    try:
        out = check_identity(lhs, rhs, prec)
    except Hyp2MzvError as exc:
        out = {"pass": False, "error": f"{exc.reason}: {exc}"}
    out["id"] = rid
    return out


@main.command()
@click.option("--id", "rid", default=None, help="identity id")
@click.option("--all", "all_", is_flag=True, help="every identity in the database")
@click.option("--jobs", type=int, default=1, envvar="HYP2MZV_JOBS", show_default=True)
@click.option("--record", is_flag=True, help="store verifiedDigits back into the database")
@_prec
@_fmt
@click.pass_context
def verify(ctx, rid, all_, jobs, record, prec, fmt):
    """Check database identities numerically at tolerance 10^-(prec-5)."""
    from .corpus import IdentityDB
    _override_format(ctx, fmt)
    try:
        db = IdentityDB.load(ctx.obj["db"])
        if all_:
            recs = list(db)
        elif rid:
            recs = [db.get(rid)]
        else:
            raise click.UsageError("give --id or --all")
    except Hyp2MzvError as exc:
        _fail(ctx, exc)
        return
    work = [(r.id, r.lhs, r.rhs, prec) for r in recs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_one, work))
    else:
        results = [_verify_one(w) for w in work]
    results.sort(key=lambda r: r["id"])
    passed = sum(r["pass"] for r in results)
    if record:
        for r in results:
            if r["pass"]:
                db.mark_verified(r["id"], prec)
        db.save()
    if ctx.obj["format"] == "json":
        click.echo(json.dumps({"status": "ok" if passed == len(results) else "fail",
                               "passed": passed, "total": len(results), "results": results}))
    else:
        for r in results:
            tag = "PASS" if r["pass"] else "FAIL"
            detail = r.get("error") or f"residual {r['residual']}"
            click.echo(f"{tag} {r['id']}: {detail}")
        click.echo(f"{passed}/{len(results)} pass")
    if passed != len(results):
        ctx.exit(5)


@main.command()
@click.argument("expr")
@click.option("--weight", type=int, required=True)
@click.option("--level", type=click.Choice(["1", "2", "4"]), default="4", show_default=True)
@click.option("--height", type=int, default=10 ** 5, show_default=True,
              help="largest entry of the integer relation (coefficients over a common denominator)")
@click.option("--mixed", is_flag=True, help="allow every weight up to --weight")
@_prec
@_fmt
@click.pass_context
def fit(ctx, expr, weight, level, height, mixed, prec, fmt):
    """Integer-relation fit of a series value over the monomial basis."""
    from .fitter import fit as do_fit
    from .fitter import mixed_basis, monomial_basis, precision_budget
    from .oracle import eval_series
    from .parser import parse_series
    _override_format(ctx, fmt)
    level = int(level)
    try:
        spec = parse_series(expr)
        basis = mixed_basis(weight, level) if mixed else monomial_basis(weight, level)
        form = do_fit(lambda d: eval_series(spec, d), basis, height_bound=height, digits=prec)
    except (NoRelation, PrecisionError) as exc:
        need = precision_budget(len(mixed_basis(weight, level) if mixed else monomial_basis(weight, level)),
                                height)
        exc.args = (f"{exc}; a basis of this size at height {height} needs --prec >= {need}",)
        _fail(ctx, exc)
        return
    except Hyp2MzvError as exc:
        _fail(ctx, exc)
        return
    _emit(ctx, {"status": "ok", "input": expr, "closed_form": str(form), "basis_size": len(basis)},
          str(form))


@main.command("fl-check")
@click.option("--terms", type=int, default=10 ** 4, show_default=True)
@click.option("--prec", type=int, default=20, show_default=True)
@_fmt
@click.pass_context
def fl_check(ctx, terms, prec, fmt):
    """Legendre orthogonality and the Parseval pairing of Li_5."""
    from .fl import orthogonality_error, parseval_check
    _override_format(ctx, fmt)
    with mpmath.workdps(prec):
        orth = orthogonality_error(20)
        res = parseval_check(prec, terms)
    ok = orth < 1e-12 and float(res.mid + res.rad) < 1e-8
    payload = {"status": "ok" if ok else "fail", "orthogonality": orth,
               "parseval_residual": float(res.mid), "parseval_radius": float(res.rad)}
    _emit(ctx, payload, f"orthogonality {orth:.2e}\nparseval residual {float(res.mid):.2e} "
                        f"(+/- {float(res.rad):.1e})\n{'PASS' if ok else 'FAIL'}")
    if not ok:
        ctx.exit(5)


@main.command("table-build")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="output file; defaults to --table or the bundled table")
@click.option("--digits", type=int, default=60, show_default=True)
@click.option("--key", "keys", multiple=True, help="only fit these keys, as k,family,m")
@_fmt
@click.pass_context
def table_build(ctx, out, digits, keys, fmt):
    """Rebuild the base table from the identity database and integer-relation fits."""
    from .basetable import FIT_KEYS, build_table
    from .corpus import IdentityDB
    _override_format(ctx, fmt)
    fit_keys = FIT_KEYS
    if keys:
        chosen = set()
        for k in keys:
            a, fam, m = k.split(",")
            chosen.add((int(a), fam.strip(), int(m)))
        fit_keys = [t for t in FIT_KEYS if t[:3] in chosen] + \
                   [(*t, 10 ** 5) for t in chosen if t not in {f[:3] for f in FIT_KEYS}]
    db = IdentityDB.load(ctx.obj["db"])
    recs = [{"id": r.id, "lhs": r.lhs, "rhs": r.rhs} for r in db]
    log = (lambda s: click.echo(s, err=True)) if ctx.obj["format"] == "text" else None
    try:
        table = build_table(recs, fit_keys, digits=digits, log=log)
    except Hyp2MzvError as exc:
        _fail(ctx, exc)
        return
    dest = out or ctx.obj["table"]
    if dest is None:
        from importlib import resources
        dest = Path(str(resources.files("hyp2mzv") / "data" / "base_table.jsonl"))
    table.save(dest)
    _emit(ctx, {"status": "ok", "entries": len(table), "path": str(dest)},
          f"wrote {len(table)} entries to {dest}")


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
