"""Printed closed formulas for the FL coefficients of Li_4 and Li_5.

Nested alternating tails are summed independently of the fl module: the
innermost tail is a Lerch transcendent and every outer level is an
alternating sum accelerated by Cohen-Villegas-Zagier.
"""
import mpmath


def _cvz(term, n):
    d = (3 + mpmath.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b, c, s = mpmath.mpf(-1), -d, mpmath.mpf(0)
    for k in range(n):
        c = b - c
        s += c * term(k)
        b = (k + n) * (k - n) * b / ((k + mpmath.mpf(1) / 2) * (k + 1))
    return s / d


def _nterms():
    return int(mpmath.mp.dps / 0.76) + 10


def alt_tail(h, n):
    """sum_{k>=n} (-1)^k h(k) for smooth decreasing h."""
    return (-1) ** n * _cvz(lambda i: h(n + i), _nterms())


def lerch_m1(s, k):
    """Lerch Phi(-1, s, k) through Hurwitz zeta."""
    k = mpmath.mpf(k)
    return mpmath.mpf(2) ** (-s) * (mpmath.zeta(s, k / 2) - mpmath.zeta(s, (k + 1) / 2))


def eta_tail(s, n):
    """sum_{j>=n} (-1)^j / j^s."""
    return (-1) ** n * lerch_m1(s, n)


def t1(s, n):
    """sum_{k>=n} (-1)^k/k^s."""
    return eta_tail(s, n)


def t2(r, s, n):
    """sum_{k>=n} 1/k^r sum_{j>=k} (-1)^j/j^s."""
    return alt_tail(lambda k: lerch_m1(s, k) / mpmath.mpf(k) ** r, n)


def t3(s, n):
    """sum_{k>=n} 1/k sum_{j>=k} 1/j sum_{l>=j} (-1)^l/l^s."""
    inner = lambda j: lerch_m1(s, j) / j  # noqa: E731
    mid = lambda k: (-1) ** k * alt_tail(inner, k) / k  # noqa: E731  (sign-free part)
    return alt_tail(mid, n)


def a_printed(n):
    n = mpmath.mpf(n)
    sg = (-1) ** int(n)
    return (-2 * sg * (1 / n + 1 / (n + 1)) * t1(3, int(n))
            - 2 * sg * (1 / n**2 + 1 / (n + 1) ** 2 + 2 / n - 2 / (n + 1)) * t1(2, int(n))
            + 4 * sg * (1 / n + 1 / (n + 1)) * t2(1, 2, int(n))
            + 1 / n**4 + 2 / n**3 - 2 / n + 2 / (n + 1) + 2 / (n + 1) ** 2 - 1 / (n + 1) ** 4)


def b_printed(n):
    i = int(n)
    n = mpmath.mpf(n)
    sg = (-1) ** i
    return (sg * (-4 / (n + 1) - 4 / n) * t2(1, 3, i)
            + sg * (-4 / (n + 1) - 4 / n) * t2(2, 2, i)
            + sg * (-4 / n**2 + 8 / (n + 1) - 4 / (n + 1) ** 2 - 8 / n) * t2(1, 2, i)
            + sg * (8 / (n + 1) + 8 / n) * t3(2, i)
            + sg * (2 / (n + 1) + 2 / n) * t1(4, i)
            + sg * (2 / n**2 - 4 / (n + 1) + 2 / (n + 1) ** 2 + 4 / n) * t1(3, i)
            + sg * (2 / n**3 + 4 / n**2 - 4 / (n + 1) ** 2 + 2 / (n + 1) ** 3) * t1(2, i)
            - 1 / n**5 - 2 / n**4 - 2 / (n + 1) - 2 / (n + 1) ** 2 - 2 / (n + 1) ** 3
            + 1 / (n + 1) ** 5 + 2 / n)
