"""Exact reduction of hypergeometric and central-binomial series to constants of CMZV level 4."""
from .core import (
    Atom, ClosedForm, GaussianRational, gq,
    PI, LOG2, SQRT2, SQRTPI, GAMMA14, EULER_GAMMA, CATALAN,
    zeta, beta, li_half, imli, hzeta4, mz, qmz,
)
from .errors import (
    Hyp2MzvError, ParseError, SemanticError, TerminatingError, DivergentError,
    PoleError, UnmatchedShapeError, ReductionMiss, PrecisionError,
)
from .parser import parse_series, parse_closedform, parse_ratfunc
from .poly import Poly, RationalFunction
from .series import SeriesSpec, PoleDecomposition, partial_fractions

__version__ = "0.1.0"
