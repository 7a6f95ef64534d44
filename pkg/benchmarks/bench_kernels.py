"""Compare the numba and numpy versions of the float64 kernels.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import time

import numpy as np

from hyp2mzv import _kernels as K


def best(fn, repeat):
    fn()  # warm-up (and JIT compile)
    out = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        out.append(time.perf_counter() - t)
    return min(out)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not K.USE_NUMBA:
        print("numba unavailable or disabled; nothing to compare")
        return
    rng = np.random.default_rng(0)
    c = rng.standard_normal(200_000) / np.arange(1, 200_001) ** 2
    x = rng.random(2000)
    s, eps = np.array([5.0, 1.0]), np.array([-1.0, 1.0])
    cases = [
        ("fl_lift n=2e5", lambda: K._fl_lift_np(c, 0.0), lambda: K._fl_lift_nb(c, 0.0)),
        ("legendre 200x2000", lambda: K._legendre_table_np(200, x), lambda: K._legendre_table_nb(200, x)),
        ("nested_sum depth2 N=1e5", lambda: K._nested_sum_np(s, eps, 100_000),
         lambda: K._nested_sum_nb(s, eps, 100_000)),
        ("nested_sum depth4 N=1e5", lambda: K._nested_sum_np(np.array([5.0, 1, 1, 1]), np.array([-1.0, 1, -1, 1]), 100_000),
         lambda: K._nested_sum_nb(np.array([5.0, 1, 1, 1]), np.array([-1.0, 1, -1, 1]), 100_000)),
    ]
    print(f"{'kernel':28s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for name, f_np, f_nb in cases:
        a, b = best(f_np, args.repeat), best(f_nb, args.repeat)
        print(f"{name:28s} {a * 1e3:10.2f} {b * 1e3:10.2f} {a / b:8.1f}")


if __name__ == "__main__":
    main()
