from fractions import Fraction

import mpmath
import numpy as np
import pytest

from hyp2mzv.fl import (
    FLSeries, dixon_coefficients, dixon_ratio, even_fold, fl_coefficient, fl_lift, li1_series,
    orthogonality_error, parseval_check, polylog_coefficients_f64, polylog_seed, polylog_series,
)
from hyp2mzv.poly import Poly, RationalFunction
from oracles.fl_printed import a_printed, b_printed

DPS = 20


@pytest.fixture(scope="module")
def li4():
    with mpmath.workdps(DPS):
        yield polylog_series(4)


@pytest.fixture(scope="module")
def li5(li4):
    with mpmath.workdps(DPS):
        yield fl_lift(li4, mpmath.zeta(5) - (mpmath.zeta(4) - mpmath.zeta(3) + mpmath.zeta(2) - 1))


@pytest.mark.parametrize("n", range(1, 11))
def test_li4_matches_printed(li4, n):
    with mpmath.workdps(DPS):
        assert abs(li4[n] - a_printed(n)) < 1e-12


@pytest.mark.parametrize("n", range(1, 11))
def test_li5_matches_printed(li5, n):
    with mpmath.workdps(DPS):
        assert abs(li5[n] - b_printed(n)) < 1e-12


def test_li4_constant(li4):
    with mpmath.workdps(DPS):
        assert abs(li4[0] - (-mpmath.zeta(3) + mpmath.pi ** 4 / 90 + mpmath.pi ** 2 / 6 - 1)) < 1e-15


def test_li4_partial_sum_is_li4(li4):
    with mpmath.workdps(DPS):
        assert abs(li4.partial(0.3, 25) - mpmath.polylog(4, 0.3)) < 1e-7


def test_seed_consistent_with_lift():
    """Li_3 by quadrature agrees with Li_3 lifted from the closed form of Li_1."""
    with mpmath.workdps(DPS):
        lifted = polylog_series(3, seed=1)
        seed = polylog_seed(3)
        for n in range(8):
            assert abs(lifted[n] - seed[n]) < 1e-14


def test_zero_series_lifts_to_boundary():
    with mpmath.workdps(DPS):
        zero = FLSeries(lambda n: 0, "zero", value_at_zero=0)
        g = fl_lift(zero, mpmath.mpf(3) / 7)
        assert g[0] == mpmath.mpf(3) / 7
        assert all(g[n] == 0 for n in range(1, 6))


def test_li1_against_quadrature():
    with mpmath.workdps(DPS):
        f = li1_series()
        for n in range(5):
            assert abs(f[n] - fl_coefficient(f.func, n)) < 1e-14
        assert f[0] == 1  # int_0^1 -log(1-x) dx


def test_f64_path_matches_mp(li5):
    c = polylog_coefficients_f64(5, 30)
    with mpmath.workdps(DPS):
        for n in range(31):
            assert abs(c[n] - float(li5[n])) < 1e-13 * max(1, abs(float(li5[n])))


def test_dixon_trivial_cases():
    with mpmath.workdps(DPS):
        one = dixon_coefficients(1, 5)
        assert one[0] == 1 and all(one[n] == 0 for n in range(1, 11))
        d = dixon_coefficients(Fraction(3, 4), 5)
        assert abs(d[0] - mpmath.beta(0.75, 0.75)) < 1e-18
        assert d[1] == 0 and d[3] == 0


@pytest.mark.parametrize("n", [1, 2])
def test_dixon_against_quadrature(n):
    with mpmath.workdps(DPS):
        d = dixon_coefficients(Fraction(3, 4), 5)

        def g(th):  # x = sin^2(theta)
            x = mpmath.sin(th) ** 2
            return 2 * mpmath.sqrt(mpmath.sin(th) * mpmath.cos(th)) * mpmath.legendre(2 * n, 2 * x - 1)

        ref = (4 * n + 1) * mpmath.quad(g, [0, mpmath.pi / 4, mpmath.pi / 2])
        assert abs(d[2 * n] - ref) < 1e-15


def test_dixon_ratio_is_central_binomial_for_three_quarters():
    for n in range(8):
        a = Fraction(1)
        for i in range(n):
            a *= Fraction(2 * i + 1, 2 * i + 2)
        assert dixon_ratio(Fraction(3, 4), n) == a


def test_even_fold_identity():
    n = Poly([0, 1])
    R = RationalFunction(Poly([1]), n) + RationalFunction(Poly([1]), n + Poly([1]))
    target = RationalFunction(Poly([1]), Poly([0, 2])) - RationalFunction(Poly([1]), Poly([1, 2]))
    assert even_fold(R) == target


def test_orthogonality():
    assert orthogonality_error(20) < 1e-12


def test_parseval_pairing():
    res = parseval_check(20, 10 ** 4)
    assert float(res.mid) < 1e-8
    off = parseval_check(20, 10 ** 4, with_constant=False)
    const = 1 - mpmath.zeta(2) + mpmath.zeta(3) - mpmath.zeta(4) + mpmath.zeta(5)
    assert abs(off.mid - abs(const)) < 1e-8


def test_legendre_kernel_matches_mpmath():
    from hyp2mzv._kernels import legendre_table
    x = np.linspace(0, 1, 7)
    P = legendre_table(12, x)
    for n in (0, 3, 12):
        for i, xi in enumerate(x):
            assert abs(P[n, i] - float(mpmath.legendre(n, 2 * xi - 1))) < 1e-13
