"""Chern characters ``tau_s`` on the teardrop algebras and their pairing with line bundles.

``tau_s`` is exact: on the normal-form basis ``a^m b^n`` (and ``a^m b*^n``) it is
``q^{2ms}/(1-q^{2ml})`` when ``n = 0, m != 0`` and zero otherwise.  The operator
trace it comes from lives in :mod:`teardrop.representations` and is only used
as a numeric cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Union

from .ncalg import NcElement, wp
from .principal import idempotent, trace_idempotent
from .qlaurent import ONE, ZERO, LaurentPoly, RatQ, as_ratq
from .representations import truncated_trace

__all__ = [
    "TauFunctional",
    "tau",
    "tau_numeric_crosscheck",
    "jackson_integral",
    "jackson_limit",
    "jackson_hat_tau",
    "chern_pairing",
    "chern_pairing_n",
    "a_polynomial",
]

APoly = Dict[int, RatQ]


def _tau_monomial(m: int, s: int, l: int) -> RatQ:
    if m == 0:
        return ZERO
    return RatQ(LaurentPoly.monomial(2 * m * s), 1 - LaurentPoly.monomial(2 * m * l))


@dataclass(frozen=True)
class TauFunctional:
    k: int
    l: int
    s: int

    def __post_init__(self):
        if not 1 <= self.s <= self.l:
            raise ValueError(f"s must lie in 1..{self.l}, got {self.s}")

    def on_word(self, word) -> RatQ:
        if any(x != "a" for x in word):
            return ZERO
        return _tau_monomial(len(word), self.s, self.l)

    def __call__(self, x: NcElement) -> RatQ:
        p = x.presentation.params
        if x.presentation.key[0] != "WP" or (p["k"], p["l"]) != (self.k, self.l):
            raise ValueError(f"tau for WP({self.k},{self.l}) applied to an element of {x.presentation!r}")
        out = ZERO
        for w, c in x.terms.items():
            v = self.on_word(w)
            if not v.is_zero():
                out = out + c * v
        return out


def tau(s: int, x: NcElement) -> RatQ:
    p = x.presentation.params
    return TauFunctional(p["k"], p["l"], s)(x)


def tau_numeric_crosscheck(s: int, m: int, N: int = 256, q=Fraction(1, 2), k: int = 1, l: int = 1) -> float:
    """``|Tr_N pi_s(a^m) - tau_s(a^m)|`` at the given ``q``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    x = wp(k, l).word(*("a",) * m)
    return abs(truncated_trace(x, s, N, q) - float(tau(s, x).eval(Fraction(q))))


# -- polynomials in a ---------------------------------------------------------

def a_polynomial(f: Union[NcElement, Mapping[int, object], Sequence]) -> APoly:
    """Coerce ``f`` to ``{power of a: RatQ}``.

    Accepts an element of a teardrop algebra that only involves ``a``, a dict,
    or a coefficient list starting at ``a^0``.
    """
    if isinstance(f, NcElement):
        out = {}
        for w, c in f.terms.items():
            if any(x != "a" for x in w):
                raise ValueError("not a polynomial in a")
            out[len(w)] = c
        return out
    if isinstance(f, Mapping):
        return {int(m): as_ratq(c) for m, c in f.items() if not as_ratq(c).is_zero()}
    return {m: as_ratq(c) for m, c in enumerate(f) if not as_ratq(c).is_zero()}


def jackson_integral(f: Mapping[int, object], x: RatQ, Q: RatQ) -> RatQ:
    """``int_0^x f(a) d_Q a`` for a Laurent polynomial ``f = {j: c_j}`` (terms ``c_j a^j``).

    On ``a^{m-1}`` the Jackson sum is geometric: ``(1-Q) x^m / (1-Q^m)``; the
    ``a^{-1}`` term telescopes to zero.  Lower powers diverge and are rejected.
    """
    x, Q = as_ratq(x), as_ratq(Q)
    out = ZERO
    for j, c in f.items():
        m = j + 1
        if m == 0:
            continue
        if m < 0:
            raise ValueError(f"the Jackson sum of a^{j} diverges")
        out = out + as_ratq(c) * (ONE - Q) * x ** m / (ONE - Q ** m)
    return out


def jackson_limit(f: Mapping[int, float], x: float, Q: float, y: float = 1e-12, terms: int = 4000) -> float:
    """Truncated defining sum ``(1-Q) sum_r (x Q^r f(x Q^r) - y Q^r f(y Q^r))`` in floating point."""
    def tf(t):
        # t * f(t), written so that the a^{-1} term never divides by a tiny t
        return sum(float(c) * t ** (j + 1) for j, c in f.items())

    total = 0.0
    for r in range(terms):
        xr, yr = x * Q ** r, y * Q ** r
        if xr == 0.0:
            break
        total += tf(xr) - tf(yr)
    return (1 - Q) * total


def jackson_hat_tau(s: int, f, l: int) -> RatQ:
    """``1/(1-q^{2l}) int_0^{q^{2s}} f(a)/a d_{q^{2l}} a`` for a polynomial ``f``."""
    if not 1 <= s <= l:
        raise ValueError(f"s must lie in 1..{l}, got {s}")
    poly = a_polynomial(f)
    Q = as_ratq(LaurentPoly.monomial(2 * l))
    x = as_ratq(LaurentPoly.monomial(2 * s))
    integrand = {m - 1: c for m, c in poly.items()}
    return jackson_integral(integrand, x, Q) / (ONE - Q)


def chern_pairing_n(l: int, s: int, n: int) -> RatQ:
    """``tau_s(Tr E[n])``; the value for ``n != 1`` carries no closed form to compare with."""
    return tau(s, trace_idempotent(idempotent(l, n)))


def chern_pairing(l: int, s: int) -> RatQ:
    return chern_pairing_n(l, s, 1)
