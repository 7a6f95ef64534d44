import json

import mpmath
import pytest
from hypothesis import given

from hyp2mzv import atoms
from hyp2mzv.atoms import AtomCache, atom_routes, digits_cap, eval_atom, eval_closedform
from hyp2mzv.ball import BigReal
from hyp2mzv.cmzv import cmzv
from hyp2mzv.core import (
    CATALAN, EULER_GAMMA, GAMMA14, LOG2, PI, SQRT2, SQRTPI, ClosedForm, beta, hzeta4, imli,
    li_half, mz, qmz, zeta,
)
from hyp2mzv.errors import PrecisionError
from strategies import real_forms

ONE_OF_EACH = [PI, LOG2, EULER_GAMMA, SQRT2, SQRTPI, GAMMA14, zeta(3), zeta(7), beta(2), CATALAN,
               beta(5), li_half(4), imli(3), hzeta4(1), hzeta4(3), mz((5, 1), (-1, 1)),
               mz((3, 1, 1), (-1, 1, -1)), qmz((4, 1), (1, 0), "im"), qmz((2, 1), (2, 1), "re")]


@pytest.mark.parametrize("a", ONE_OF_EACH, ids=str)
def test_routes_agree(a):
    va, vb = atom_routes(a, 30)
    with mpmath.workdps(45):
        assert abs(va - vb) < mpmath.mpf(10) ** -32


def test_zeta2_is_pi_squared_over_6():
    with mpmath.workdps(50):
        z2 = mpmath.zeta(2)
    val = eval_closedform(ClosedForm.atom(PI, power=2), 40)
    with mpmath.workdps(50):
        assert abs(val.mid / 6 - z2) < mpmath.mpf(10) ** -38


def test_eval_atom_radius():
    v = eval_atom(zeta(5), 40)
    assert v.rad < mpmath.mpf(10) ** -40


def test_digits_cap():
    cap = atoms.MAX_DIGITS
    with pytest.raises(PrecisionError):
        eval_atom(PI, cap + 1)
    with digits_cap(cap + 50):
        assert eval_atom(PI, cap + 10).rad > 0
    assert atoms.MAX_DIGITS == cap
    with pytest.raises(PrecisionError):
        eval_atom(PI, cap + 1)


def test_empty_form_is_exact_zero():
    v = eval_closedform(ClosedForm(), 30)
    assert v.mid == 0 and v.rad == 0


@given(real_forms)
def test_ball_contains_reference(f):
    v = eval_closedform(f, 25)
    with mpmath.workdps(60):
        ref = mpmath.mpf(0)
        for m, c in f.items():
            t = c.to_mp()
            for a, e in m:
                t *= atoms._lib(a) ** e
            ref += t
        assert abs(v.mid - ref) <= v.rad + mpmath.mpf(10) ** -45


def test_cmzv_depth_one_is_polylog():
    with mpmath.workdps(30):
        assert abs(cmzv([3], [-1]).real + mpmath.mpf(3) / 4 * mpmath.zeta(3)) < 1e-28
        assert abs(cmzv([2], [1j]) - mpmath.polylog(2, 1j)) < 1e-28


def test_cache_round_trip(tmp_path):
    p = tmp_path / "atoms.jsonl"
    c = AtomCache(p)
    val = eval_atom(zeta(3), 30)
    c.put(zeta(3), 30, val)
    again = AtomCache(p)
    hit = again.get(zeta(3), 30)
    with mpmath.workdps(40):
        assert abs(hit.mid - val.mid) <= hit.rad
    assert again.get(zeta(3), 31) is None


def test_cache_ignores_uncertified_lines(tmp_path):
    p = tmp_path / "atoms.jsonl"
    p.write_text(json.dumps({"atom": "zeta(3)", "digits": 30, "mid": "1.2", "rad": "0.1"}) + "\n"
                 + "not json\n")
    assert AtomCache(p).get(zeta(3), 10) is None


def test_cache_used_by_eval(tmp_path):
    old = atoms.get_cache()
    try:
        fake = AtomCache(None)
        fake.put(LOG2, 20, BigReal(mpmath.mpf(7), mpmath.mpf(10) ** -25))
        atoms.set_cache(fake)
        assert eval_atom(LOG2, 20).mid == 7
    finally:
        atoms.set_cache(old)
