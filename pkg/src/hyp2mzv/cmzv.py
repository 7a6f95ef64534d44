"""Colored multiple zeta values at level 1/2/4 via iterated integrals.

A colored MZV ``sum_{n1>...>nk>0} prod x_i^{n_i} / n_i^{s_i}`` with roots of
unity ``x_i`` is written as a Goncharov iterated integral ``G(w; 1)`` and the
path ``0 -> 1`` is split at ``1/p`` (Hoelder convolution).  Both halves are
multiple polylogarithm series with geometric convergence, so the cost is
linear in the requested digits.
"""
from __future__ import annotations

import mpmath
from mpmath import mpc, mpf

__all__ = ["word_of", "goncharov_series", "cmzv", "holder_value"]


def word_of(s, x):
    """Letters of ``G`` for ``Li_{s}(x)``.  Returns ``(sign, letters)``."""
    letters = []
    prod = mpc(1)
    for si, xi in zip(s, x):
        prod = prod * xi
        letters.extend([mpc(0)] * (si - 1))
        letters.append(1 / prod)
    return (-1) ** len(s), letters


def _split(letters):
    """Write a word ending in a nonzero letter as (exponents, nonzero letters)."""
    exps, nz = [], []
    run = 0
    for a in letters:
        if a == 0:
            run += 1
        else:
            exps.append(run + 1)
            nz.append(a)
            run = 0
    if run:
        raise ValueError("word must end in a nonzero letter")
    return exps, nz


def goncharov_series(letters, y, eps):
    """``G(letters; y)`` by its nested series; needs ``|y| < |a|`` for nonzero letters.

    Terms are carried in telescoped form ``prod u_i^{n_i - n_{i+1}}`` with
    ``u_i = y / a_i`` so no intermediate quantity grows.
    """
    if not letters:
        return mpc(1)
    if all(a == 0 for a in letters):
        return mpmath.log(y) ** len(letters) / mpmath.factorial(len(letters))
    exps, nz = _split(letters)
    k = len(nz)
    u = [y / a for a in nz]
    rmax = max(abs(v) for v in u)
    if rmax >= 1:
        raise ValueError("series does not converge: |y| >= |letter|")
    # number of terms for rmax^N * N^(k) < eps with a little slack
    nterms = int(mpmath.log(eps) / mpmath.log(rmax)) + 10 * k + 10
    # carry[i] holds X_{i+1}(n) for level i (0-based, i < k-1)
    carry = [mpc(0)] * k
    upow = mpc(1)
    total = mpc(0)
    for n in range(1, nterms + 1):
        upow *= u[k - 1]
        # innermost level
        c_next = upow / mpf(n) ** exps[k - 1]
        for i in range(k - 2, -1, -1):
            # X_{i+1}(n) = u_i * (X_{i+1}(n-1) + c_{i+1}(n-1)); carry updated below
            c_cur = carry[i] / mpf(n) ** exps[i]
            carry[i] = u[i] * (carry[i] + c_next)
            c_next = c_cur
        total += c_next
    return (-1) ** k * total


def holder_value(letters, p=2, eps=None):
    """``G(letters; 1)`` by splitting the path at ``1/p``."""
    if eps is None:
        eps = mpf(2) ** (-mpmath.mp.prec)
    p = mpf(p)
    y1 = 1 / p
    y2 = 1 - y1
    w = len(letters)
    total = mpc(0)
    for j in range(w + 1):
        head = [1 - a for a in reversed(letters[:j])]
        tail = letters[j:]
        # reversal t -> 1 - t flips the sign of every letter's measure
        total += (-1) ** j * goncharov_series(head, y2, eps) * goncharov_series(tail, y1, eps)
    return total


def cmzv(s, x, p=2):
    """``sum_{n1>...>nk>0} prod x_i^{n_i}/n_i^{s_i}`` as an mpc at the current precision."""
    if s[0] == 1 and x[0] == 1:
        raise ValueError("divergent: leading s=1 with trivial character")
    with mpmath.extraprec(20 + 4 * sum(s)):
        sign, letters = word_of(s, [mpc(v) for v in x])
        val = sign * holder_value(letters, p=p)
    return +val
