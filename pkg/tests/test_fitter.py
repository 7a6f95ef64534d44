from fractions import Fraction

import mpmath
import pytest
from hypothesis import example, given, settings
from hypothesis import strategies as st

from hyp2mzv.atoms import digits_cap, eval_closedform
from hyp2mzv.ball import BigReal
from hyp2mzv.core import LOG2, PI, ClosedForm, zeta
from hyp2mzv.errors import NoRelation, PrecisionError
from hyp2mzv.fitter import fit, mixed_basis, monomial_basis, precision_budget
from hyp2mzv.parser import parse_closedform

SIZES = {(1, 2): 2, (2, 2): 3, (3, 2): 5, (4, 2): 8, (5, 2): 13,
         (1, 4): 2, (2, 4): 4, (3, 4): 8, (4, 4): 16, (5, 4): 32}


@pytest.mark.parametrize("w,level", sorted(SIZES))
def test_basis_sizes(w, level):
    assert len(monomial_basis(w, level)) == SIZES[(w, level)]


def test_weight_two_level_two():
    basis = monomial_basis(2, 2)
    assert {frozenset(m) for m in basis} == {frozenset({(PI, 2)}), frozenset({(LOG2, 1), (PI, 1)}),
                                             frozenset({(LOG2, 2)})}
    assert monomial_basis(0, 4) == [()]


def test_mixed_sizes():
    assert [len(mixed_basis(w, 4)) for w in range(1, 6)] == [3, 7, 15, 31, 63]


def test_basis_is_canonical():
    for m in monomial_basis(4, 4):
        assert ClosedForm({m: 1}).canonical() == ClosedForm({m: 1})
        assert (zeta(2), 1) not in m and (zeta(4), 1) not in m


def test_precision_budget():
    assert precision_budget(3, 10 ** 5) == 25
    assert precision_budget(31, 10 ** 5) == 165


def test_half_pi_log2():
    val = eval_closedform(parse_closedform("pi*log2/2"), 40)
    assert fit(val, monomial_basis(2, 2), height_bound=10 ** 4) == parse_closedform("1/2*pi*log2")


def test_pi_has_no_relation_with_one():
    with pytest.raises(NoRelation):
        fit(eval_closedform(ClosedForm.atom(PI), 60), [()], height_bound=10 ** 5, digits=60)


def test_too_few_digits():
    val = eval_closedform(ClosedForm.atom(PI), 15)
    with pytest.raises(PrecisionError):
        fit(BigReal(val.mid, mpmath.mpf(10) ** -15), monomial_basis(4, 4), height_bound=10 ** 5)


coeff = st.fractions(min_value=-50, max_value=50, max_denominator=8)


@settings(max_examples=15)
@given(st.lists(coeff, min_size=5, max_size=5))
@example([Fraction(0), Fraction(73, 3), Fraction(1, 4), Fraction(1, 5), Fraction(1, 7)])
def test_recovers_planted_relation(cs):
    basis = monomial_basis(3, 4)[:5]
    planted = ClosedForm({m: c for m, c in zip(basis, cs) if c}).canonical()
    if planted.is_zero():
        return
    # over a common denominator (up to 840) the integer relation reaches 50*840
    got = fit(lambda d: eval_closedform(planted, d), basis, height_bound=10 ** 5)
    assert got == planted


def test_lemma5_style_target_against_level4_basis():
    target = parse_closedform("217/4*zeta(5) - 3/8*pi*hzeta(4,1/4) + 7*pi^2*zeta(3)/16")
    basis = monomial_basis(5, 4)
    need = precision_budget(len(basis), 10 ** 5)
    with digits_cap(int(need * 1.5) + 30):
        got = fit(lambda d: eval_closedform(target, d), basis, height_bound=10 ** 5)
    assert got == target.canonical()
