"""Certified numerical values of atoms: two independent routes per kind, disk cache."""
from __future__ import annotations

import json
import os
import threading
from contextlib import contextmanager
from pathlib import Path

import mpmath

from .ball import BigReal, ball
from .cmzv import cmzv
from .core import Atom, ClosedForm
from .errors import PrecisionError

__all__ = ["eval_atom", "eval_closedform", "atom_routes", "AtomCache", "set_cache",
           "cvz_alternating", "MAX_DIGITS", "digits_cap"]

MAX_DIGITS = int(os.environ.get("HYP2MZV_MAX_DIGITS", "120"))


@contextmanager
def digits_cap(n: int):
    """Temporarily raise the atom precision ceiling to at least ``n``."""
    global MAX_DIGITS
    old = MAX_DIGITS
    MAX_DIGITS = max(old, n)
    try:
        yield
    finally:
        MAX_DIGITS = old


def cvz_alternating(term, n):
    """Cohen-Villegas-Zagier sum of ``sum_{k>=0} (-1)^k term(k)``, ``n`` terms."""
    d = (3 + mpmath.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mpmath.mpf(-1)
    c = -d
    s = mpmath.mpf(0)
    for k in range(n):
        c = b - c
        s += c * term(k)
        b = (k + n) * (k - n) * b / ((k + mpmath.mpf(1) / 2) * (k + 1))
    return s / d


def _cvz_terms() -> int:
    # error ~ 5.8^-n
    return int(mpmath.mp.dps / 0.76) + 10


# ---- route A: library values -------------------------------------------------

def _lib(a: Atom):
    k, args = a.kind, a.args
    if k == "pi":
        return +mpmath.pi
    if k == "log2":
        return +mpmath.ln2
    if k == "gammaE":
        return +mpmath.euler
    if k == "sqrt2":
        return mpmath.sqrt(2)
    if k == "sqrtpi":
        return mpmath.sqrt(mpmath.pi)
    if k == "gamma14":
        return mpmath.gamma(mpmath.mpf(1) / 4)
    if k == "zeta":
        return mpmath.zeta(args[0])
    if k == "beta":
        n = args[0]
        q = mpmath.mpf(1) / 4
        return (mpmath.zeta(n, q) - mpmath.zeta(n, 3 * q)) / mpmath.mpf(4) ** n
    if k == "li":
        return mpmath.polylog(args[0], mpmath.mpf(1) / 2)
    if k == "imli":
        return mpmath.polylog(args[0], mpmath.mpc(0.5, 0.5)).imag
    if k == "hzeta":
        return mpmath.zeta(4, mpmath.mpf(args[0]) / 4)
    if k in ("mz", "qmz"):
        return _cmzv_atom(a, p=2)
    raise ValueError(k)


def _cmzv_atom(a: Atom, p: int):
    if a.kind == "mz":
        s, signs = a.args
        return cmzv(list(s), list(signs), p=p).real
    s, chars, part = a.args
    xs = [mpmath.mpc(0, 1) ** c for c in chars]
    v = cmzv(list(s), xs, p=p)
    return v.imag if part == "im" else v.real


# ---- route B: hand-rolled series ----------------------------------------------

def _atan_inv(x: int):
    """arctan(1/x) by its Taylor series."""
    x2 = x * x
    term = mpmath.mpf(1) / x
    s = term
    k = 0
    eps = mpmath.eps
    while abs(term) > eps:
        k += 1
        term /= -x2
        s += term / (2 * k + 1)
    return s


def _machin_pi():
    return 16 * _atan_inv(5) - 4 * _atan_inv(239)


def _newton_sqrt(x):
    y = mpmath.mpf(float(x) ** 0.5)
    for _ in range(int(mpmath.log(mpmath.mp.prec, 2)) + 3):
        y = (y + x / y) / 2
    return y


def _log2_series():
    s = mpmath.mpf(0)
    p = mpmath.mpf(1)
    k = 0
    while True:
        k += 1
        p /= 2
        t = p / k
        s += t
        if t < mpmath.eps:
            return s


def _euler_maclaurin_gamma():
    N = mpmath.mp.dps + 10
    H = mpmath.fsum(mpmath.mpf(1) / j for j in range(1, N + 1))
    s = H - mpmath.log(N) - mpmath.mpf(1) / (2 * N)
    for k in range(1, 2 * N):
        t = mpmath.bernoulli(2 * k) / (2 * k * mpmath.mpf(N) ** (2 * k))
        s += t
        if abs(t) < mpmath.eps:
            break
    return s


def _eta_cvz(n: int):
    return cvz_alternating(lambda k: 1 / mpmath.mpf(k + 1) ** n, _cvz_terms())


def _beta_cvz(n: int):
    return cvz_alternating(lambda k: 1 / mpmath.mpf(2 * k + 1) ** n, _cvz_terms())


def _power_series(n: int, x):
    s = 0
    xk = 1
    k = 0
    while True:
        k += 1
        xk *= x
        t = xk / mpmath.mpf(k) ** n
        s += t
        if abs(t) < mpmath.eps:
            return s


def _series(a: Atom):
    k, args = a.kind, a.args
    if k == "pi":
        return _machin_pi()
    if k == "log2":
        return _log2_series()
    if k == "gammaE":
        return _euler_maclaurin_gamma()
    if k == "sqrt2":
        return _newton_sqrt(mpmath.mpf(2))
    if k == "sqrtpi":
        return _newton_sqrt(_machin_pi())
    if k == "gamma14":
        # lemniscatic route: Gamma(1/4)^2 = 2 sqrt(2 pi) * pi / agm(1, sqrt 2)
        pi = _machin_pi()
        return _newton_sqrt(2 * _newton_sqrt(2 * pi) * pi / mpmath.agm(1, _newton_sqrt(2)))
    if k == "zeta":
        n = args[0]
        return _eta_cvz(n) / (1 - mpmath.mpf(2) ** (1 - n))
    if k == "beta":
        return _beta_cvz(args[0])
    if k == "li":
        return _power_series(args[0], mpmath.mpf(1) / 2)
    if k == "imli":
        return _power_series(args[0], mpmath.mpc(0.5, 0.5)).imag
    if k == "hzeta":
        sign = 1 if args[0] == 1 else -1
        z4 = _eta_cvz(4) / (1 - mpmath.mpf(2) ** -3)
        return mpmath.mpf(4) ** 4 / 2 * ((1 - mpmath.mpf(2) ** -4) * z4 + sign * _beta_cvz(4))
    if k in ("mz", "qmz"):
        return _cmzv_atom(a, p=3)
    raise ValueError(k)


def atom_routes(a: Atom, digits: int):
    """Both independent values of ``a`` at ``digits`` (plus guard digits)."""
    with mpmath.workdps(digits + 15):
        return +_lib(a), +_series(a)


# ---- cache ---------------------------------------------------------------------

class AtomCache:
    """Append-only JSON-lines store of certified atom values.

    Each line holds ``atom`` (canonical text), ``digits``, ``mid`` and ``rad``.
    Records whose radius does not certify their digit count are ignored on load.
    """

    def __init__(self, path=None):
        self.path = Path(path) if path else None
        self._mem: dict = {}
        self._lock = threading.Lock()
        if self.path and self.path.exists():
            self._load()

    def _load(self):
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                    digits = int(rec["digits"])
                    with mpmath.workdps(digits + 15):
                        mid = mpmath.mpf(rec["mid"])
                        rad = mpmath.mpf(rec["rad"])
                except (ValueError, KeyError):
                    continue
                if rad >= mpmath.mpf(10) ** (-digits):
                    continue
                key = rec["atom"]
                old = self._mem.get(key)
                if old is None or old[0] < digits:
                    self._mem[key] = (digits, mid, rad)

    def get(self, a: Atom, digits: int):
        hit = self._mem.get(str(a))
        if hit and hit[0] >= digits:
            return BigReal(hit[1], hit[2])
        return None

    def put(self, a: Atom, digits: int, value: BigReal):
        key = str(a)
        with self._lock:
            old = self._mem.get(key)
            if old and old[0] >= digits:
                return
            self._mem[key] = (digits, value.mid, value.rad)
            if self.path:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with mpmath.workdps(digits + 15):
                    mid = mpmath.nstr(value.mid, digits + 12, min_fixed=-1, max_fixed=-1)
                    # nstr may round the midpoint; widen the radius accordingly
                    spill = abs(mpmath.mpf(mid) - value.mid)
                    rec = {"atom": key, "digits": digits, "mid": mid,
                           "rad": mpmath.nstr(value.rad + spill * 2, 5)}
                with open(self.path, "a", encoding="utf-8", newline="\n") as fh:
                    fh.write(json.dumps(rec) + "\n")


_cache = AtomCache(os.environ.get("HYP2MZV_ATOM_CACHE") or None)


def set_cache(cache: AtomCache):
    global _cache
    _cache = cache


def get_cache() -> AtomCache:
    return _cache


def eval_atom(a: Atom, digits: int) -> BigReal:
    """Value of ``a`` with radius below ``10^-digits``, checked by two routes."""
    if digits > MAX_DIGITS:
        raise PrecisionError(f"{digits} digits exceeds the configured maximum {MAX_DIGITS}")
    hit = _cache.get(a, digits)
    if hit is not None:
        return hit
    with mpmath.workdps(digits + 15):
        va, vb = atom_routes(a, digits)
        floor = mpmath.mpf(10) ** (-(digits + 12))
        rad = abs(va - vb) + floor
        val = BigReal(va, rad)
    if rad >= mpmath.mpf(10) ** (-digits):
        raise PrecisionError(f"routes for {a} disagree by {mpmath.nstr(rad, 3)}",
                             achieved=val.digits())
    _cache.put(a, digits, val)
    return val


def eval_closedform(f: ClosedForm, digits: int) -> BigReal:
    """Ball evaluation of a closed form; the empty form is exactly zero."""
    if f.is_zero():
        return BigReal(0, 0)
    with mpmath.workdps(digits + 10):
        total = BigReal(0, 0)
        for m, c in f.items():
            term = ball(c)
            for at, e in m:
                term = term * eval_atom(at, digits + 5) ** e
            total = total + term
        return total
