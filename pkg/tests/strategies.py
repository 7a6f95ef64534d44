"""Hypothesis strategies shared by the property tests."""
from fractions import Fraction

from hypothesis import strategies as st

from hyp2mzv.core import (
    CATALAN, LOG2, PI, SQRT2, ClosedForm, GaussianRational, beta, hzeta4, imli, li_half, mz, qmz,
    zeta,
)

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, small_fracs, st.one_of(st.just(Fraction(0)), small_fracs))

ATOMS = [PI, LOG2, SQRT2, CATALAN, zeta(3), zeta(5), beta(4), li_half(4), imli(3), hzeta4(1),
         mz((5, 1), (-1, 1)), qmz((4, 1), (1, 0), "im")]

monomials = st.dictionaries(st.sampled_from(ATOMS), st.integers(1, 3), max_size=3).map(
    lambda d: tuple(sorted(d.items())))
forms = st.dictionaries(monomials, gaussians, max_size=5).map(ClosedForm)
real_forms = st.dictionaries(monomials, small_fracs.map(GaussianRational), max_size=5).map(ClosedForm)


@st.composite
def admissible_specs(draw, ks=(0, 1), max_weight=4):
    """Random convergent binomial sums with every pole on the reducer's lattice.

    k = 0 uses quarter-integer poles (half-integer only when alternating),
    k = 1 half-integer poles. Numerators may have Gaussian coefficients.
    """
    from hyp2mzv.poly import Poly, RationalFunction
    from hyp2mzv.series import SeriesSpec

    k = draw(st.sampled_from(ks))
    sign = draw(st.sampled_from([1, -1])) if k == 0 else 1
    d = 4 if k == 0 else 2
    js = st.integers(-5, 7) if k == 0 else st.integers(-3, 5)
    if sign == -1:
        js = js.filter(lambda j: j % 2 == 0)
    min_deg = 2 if (k == 0 and sign == 1) else 1
    total = draw(st.integers(min_deg, max_weight))
    factors = {}
    left = total
    while left:
        j = draw(js)
        e = draw(st.integers(1, left))
        factors[j] = factors.get(j, 0) + e
        left -= e
    den = Poly([1])
    for j, e in factors.items():
        den = den * Poly([j, d]) ** e
    gap = 1 if (k == 1 or sign == -1) else 2
    ndeg = draw(st.integers(0, total - gap))
    coeffs = [draw(gaussians) for _ in range(ndeg)] + [draw(gaussians.filter(lambda g: not g.is_zero()))]
    start = max(0, max(-j // d + 1 for j in factors)) + draw(st.integers(0, 2))
    R = RationalFunction(Poly(coeffs), den)
    return SeriesSpec("binom", k=k, R=R, start=start, sign=sign)
