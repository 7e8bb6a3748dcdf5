"""Independent reference computations used by the tests.

Nothing here imports the package: q-binomials come from the Pascal recurrence,
operators are built entry by entry in plain loops, and series are summed
term by term with exact fractions.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np


def gaussian_binomial(n: int, k: int, x: Fraction) -> Fraction:
    """``[n, k]_x`` from ``[n, k] = [n-1, k-1] + x^k [n-1, k]``."""
    if k < 0 or k > n:
        return Fraction(0)
    table = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        table[i][0] = Fraction(1)
        for j in range(1, i + 1):
            table[i][j] = table[i - 1][j - 1] + x ** j * table[i - 1][j]
    return table[n][k]


def binomial(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def geometric_trace(m: int, s: int, l: int, q: Fraction, terms: int = 400) -> Fraction:
    """``sum_{p < terms} q^{2m(lp+s)}`` exactly."""
    return sum((q ** (2 * m * (l * p + s)) for p in range(terms)), Fraction(0))


def su2_matrices(N: int, q: float):
    alpha = np.zeros((N, N))
    beta = np.zeros((N, N))
    for n in range(N):
        beta[n, n] = q ** (n + 1)
        if n >= 1:
            alpha[n - 1, n] = (1 - q ** (2 * n)) ** 0.5
    return alpha, beta


def wp_matrices(k: int, l: int, s: int, N: int, q: float):
    a = np.zeros((N, N))
    b = np.zeros((N, N))
    for p in range(N):
        a[p, p] = q ** (2 * (l * p + s))
        if p >= 1:
            c = q ** (k * (l * p + s))
            for r in range(1, l + 1):
                c *= (1 - q ** (2 * (l * p + s - r))) ** 0.5
            b[p - 1, p] = c
    return a, b
