from fractions import Fraction

import mpmath
import pytest
from hypothesis import given

from hyp2mzv.atoms import eval_closedform
from hyp2mzv.core import (
    CATALAN, LOG2, PI, ClosedForm, GaussianRational, beta, bernoulli, euler_number, hzeta4,
    zeta,
)
from strategies import forms, gaussians


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not b.is_zero():
        assert (a / b) * b == a


def test_gaussian_str():
    assert str(GaussianRational(Fraction(1, 2), 3)) in ("1/2+3i", "(1/2+3i)")
    assert GaussianRational(0, 1) ** 2 == GaussianRational(-1)


@given(forms, forms, forms)
def test_closedform_ring_axioms(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()
    assert f * ClosedForm.const(1) == f


@given(forms, forms)
def test_canonical_is_idempotent_and_value_preserving(f, g):
    c = (f * g).canonical()
    assert c.canonical() == c
    with mpmath.workdps(30):
        a = eval_closedform(f * g, 20)
        b = eval_closedform(c, 20)
        assert abs(a.mid - b.mid) <= a.rad + b.rad + mpmath.mpf(10) ** -15 * max(1, abs(a.mid))


def test_even_zeta_becomes_pi_power():
    f = ClosedForm.atom(zeta(2)).canonical()
    assert f == ClosedForm.atom(PI, power=2, coeff=Fraction(1, 6))
    f = ClosedForm.atom(zeta(4)).canonical()
    assert f == ClosedForm.atom(PI, power=4, coeff=Fraction(1, 90))


def test_odd_beta_becomes_pi_power():
    assert ClosedForm.atom(beta(1)).canonical() == ClosedForm.atom(PI, coeff=Fraction(1, 4))
    assert ClosedForm.atom(beta(3)).canonical() == ClosedForm.atom(PI, power=3, coeff=Fraction(1, 32))


def test_hurwitz_quarter_rewrite():
    f = ClosedForm.atom(hzeta4(1)).canonical()
    assert f == ClosedForm({((PI, 4),): Fraction(4, 3), ((beta(4), 1),): 128})
    g = ClosedForm.atom(hzeta4(3)).canonical()
    assert g == ClosedForm({((PI, 4),): Fraction(4, 3), ((beta(4), 1),): -128})


def test_weight_is_homogeneous_degree():
    f = ClosedForm({((PI, 2), (LOG2, 1)): 1, ((CATALAN, 1),): 3})
    assert f.weight() == 3


@pytest.mark.parametrize("n,val", [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(1, 6)),
                                   (4, Fraction(-1, 30)), (12, Fraction(-691, 2730))])
def test_bernoulli(n, val):
    assert bernoulli(n) == val


def test_euler_numbers():
    assert [euler_number(n) for n in (0, 2, 4, 6)] == [1, -1, 5, -61]
