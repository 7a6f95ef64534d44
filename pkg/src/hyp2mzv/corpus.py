"""Identity database: JSON lines, one record per identity, sorted by id."""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path

import mpmath

from .errors import UnknownIdError

__all__ = ["IdentityRecord", "IdentityDB", "default_db_path", "check_identity"]


@dataclass
class IdentityRecord:
    id: str
    lhs: str
    rhs: str
    source: str
    weight: int
    verifiedDigits: int = 0
    verifiedAt: str | None = None
    extra: dict = field(default_factory=dict)

    def validate(self):
        from .parser import parse_closedform, parse_series
        parse_series(self.lhs)
        parse_closedform(self.rhs)
        if self.verifiedDigits > 0 and not self.verifiedAt:
            raise ValueError(f"{self.id}: verifiedDigits set without a timestamp")

    def to_json(self) -> dict:
        d = asdict(self)
        if not d["extra"]:
            d.pop("extra")
        return d

    @classmethod
    def from_json(cls, d: dict) -> "IdentityRecord":
        known = {k: d[k] for k in ("id", "lhs", "rhs", "source", "weight") }
        return cls(**known, verifiedDigits=int(d.get("verifiedDigits", 0)),
                   verifiedAt=d.get("verifiedAt"), extra=d.get("extra", {}))


def default_db_path() -> Path:
    return Path(str(resources.files("hyp2mzv") / "data" / "identities.jsonl"))


class IdentityDB:
    def __init__(self, records=(), path=None):
        self.path = Path(path) if path else None
        self.records: dict = {}
        for r in records:
            self.records[r.id] = r

    @classmethod
    def load(cls, path=None) -> "IdentityDB":
        path = Path(path) if path else default_db_path()
        recs = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    recs.append(IdentityRecord.from_json(json.loads(line)))
        return cls(recs, path)

    def save(self, path=None):
        path = Path(path) if path else self.path
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for rid in sorted(self.records):
                fh.write(json.dumps(self.records[rid].to_json(), ensure_ascii=False) + "\n")

    def get(self, rid: str) -> IdentityRecord:
        try:
            return self.records[rid]
        except KeyError:
            raise UnknownIdError(f"no identity with id {rid!r}") from None

    def ids(self) -> list:
        return sorted(self.records)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return (self.records[r] for r in self.ids())

    def mark_verified(self, rid: str, digits: int):
        rec = self.get(rid)
        if digits > rec.verifiedDigits:
            rec.verifiedDigits = digits
            rec.verifiedAt = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())


def check_identity(lhs: str, rhs: str, prec: int = 40) -> dict:
    """Evaluate both sides at ``prec`` digits; pass when the residual is below 10^-(prec-5)."""
    from .atoms import eval_closedform
    from .oracle import eval_series
    from .parser import parse_closedform, parse_series
    t0 = time.perf_counter()
    a = eval_series(parse_series(lhs), prec)
    b = eval_closedform(parse_closedform(rhs), prec)
    with mpmath.workdps(prec + 10):
        resid = abs(a.mid - b.mid)
        tol = mpmath.mpf(10) ** (-(prec - 5))
        ok = bool(resid < tol)
        return {"residual": mpmath.nstr(resid, 5), "pass": ok, "tolerance": f"1e-{prec - 5}",
                "value": mpmath.nstr(a.mid, min(prec, 30)), "seconds": round(time.perf_counter() - t0, 3)}
