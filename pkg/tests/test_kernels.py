import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyp2mzv import _kernels as K

needs_numba = pytest.mark.skipif(not K.USE_NUMBA, reason="numba path disabled")


@needs_numba
@given(st.integers(0, 30), st.lists(st.floats(0, 1), min_size=1, max_size=20))
def test_legendre_paths_agree(n_max, xs):
    x = np.array(xs)
    assert np.allclose(K._legendre_table_nb(n_max, x), K._legendre_table_np(n_max, x), rtol=0, atol=1e-12)


@needs_numba
@given(st.lists(st.floats(-10, 10), min_size=2, max_size=200), st.floats(-2, 2))
def test_fl_lift_paths_agree(c, f0):
    c = np.array(c)
    a, b = K._fl_lift_nb(c, f0), K._fl_lift_np(c, f0)
    assert np.allclose(a, b, rtol=1e-12, atol=1e-9)
    assert a[0] == 0 and b[0] == 0


@needs_numba
@settings(max_examples=20)
@given(st.lists(st.tuples(st.integers(1, 4), st.sampled_from([1.0, -1.0])), min_size=1, max_size=3),
       st.integers(1, 300))
def test_nested_sum_paths_agree(levels, N):
    s = np.array([float(a) for a, _ in levels])
    e = np.array([b for _, b in levels])
    assert abs(K._nested_sum_nb(s, e, N) - K._nested_sum_np(s, e, N)) < 1e-12


def test_nested_sum_small_case():
    # sum_{3 >= n1 > n2 >= 1} 1/(n1^2 n2) = 1/4 + (1 + 1/2)/9
    assert abs(K.nested_sum_f64([2, 1], [1, 1], 3) - (0.25 + 1.5 / 9)) < 1e-15


def test_env_flag_selects_numpy():
    env = dict(os.environ, HYP2MZV_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", "from hyp2mzv._kernels import backend; print(backend())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"
