"""The three presentations: quantum SU(2), quantum teardrops and quantum lens spaces.

Generator names follow the plain-text syntax: ``alpha, alphaS, beta, betaS``
for SU_q(2); ``a, b, bS`` for WP_q(k,l) (``a`` is self-adjoint); and
``c, cS, d, dS`` for L_q(l;1,l).  Rules move the diagonal-type letters
(beta, a, d) to the right of the shift-type letters and order ``x`` before
``xS``, so normal words are ``alpha^p beta^r betaS^s``, ``alphaS^p beta^r betaS^s``,
``a^m b^n``, ``a^m bS^n``, ``c^p d^r dS^s`` and ``cS^p d^r dS^s``.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Dict, List, Tuple

from ..qlaurent import ONE, LaurentPoly
from .core import Presentation, Word

__all__ = ["make_presentation", "su2", "wp", "lens", "poly_in"]


def _qp(e: int, c=1) -> LaurentPoly:
    return LaurentPoly.monomial(e, c)


def poly_in(letters: Word, factors: List[LaurentPoly]) -> Dict[Word, LaurentPoly]:
    """Expand ``prod_i (1 + f_i x)`` with ``x`` the word ``letters`` into ``{x^j: coeff}``.

    Each entry of ``factors`` is the coefficient ``f_i`` of a linear factor.
    """
    coeffs = [ONE]
    for f in factors:
        nxt = coeffs + [LaurentPoly()]
        for j in range(len(coeffs)):
            nxt[j + 1] = nxt[j + 1] + coeffs[j] * f
        coeffs = nxt
    return {letters * j: c for j, c in enumerate(coeffs) if c}


def _check_kl(k: int, l: int) -> None:
    if k < 1 or l < 1:
        raise ValueError(f"weights must be positive, got k={k}, l={l}")
    if gcd(k, l) != 1:
        raise ValueError(f"weights must be coprime, got k={k}, l={l}")


@lru_cache(maxsize=None)
def su2(k: int = 1, l: int = 1) -> Presentation:
    """O(SU_q(2)) graded by the weighted circle coaction ``alpha -> u^k``, ``beta -> u^-l``."""
    _check_kl(k, l)
    A, AS, B, BS = "alpha", "alphaS", "beta", "betaS"
    rules = {
        (B, A): {(A, B): _qp(-1)},
        (BS, A): {(A, BS): _qp(-1)},
        (B, AS): {(AS, B): _qp(1)},
        (BS, AS): {(AS, BS): _qp(1)},
        (BS, B): {(B, BS): ONE},
        (A, AS): {(): ONE, (B, BS): _qp(0, -1)},
        (AS, A): {(): ONE, (B, BS): _qp(-2, -1)},
    }
    return Presentation(
        name=f"SUq2[rho_{k},{l}]",
        alphabet=(A, AS, B, BS),
        star={A: AS, AS: A, B: BS, BS: B},
        rules=rules,
        grading={A: k, AS: -k, B: -l, BS: l},
        fine_grading={A: (1, 0), AS: (-1, 0), B: (0, 1), BS: (0, -1)},
        params={"k": k, "l": l},
        key=("SUq2", k, l),
    )


@lru_cache(maxsize=None)
def wp(k: int, l: int) -> Presentation:
    """O(WP_q(k,l)) on generators ``a = a*``, ``b``, ``bS``."""
    _check_kl(k, l)
    a, b, bS = "a", "b", "bS"
    # b b* = q^{2kl} a^k prod_{m=0}^{l-1} (1 - q^{2m} a)
    bbs = {(a,) * k + w: c * _qp(2 * k * l) for w, c in poly_in((a,), [_qp(2 * m, -1) for m in range(l)]).items()}
    # b* b = a^k prod_{m=1}^{l} (1 - q^{-2m} a)
    bsb = {(a,) * k + w: c for w, c in poly_in((a,), [_qp(-2 * m, -1) for m in range(1, l + 1)]).items()}
    rules = {
        (b, a): {(a, b): _qp(2 * l)},
        (bS, a): {(a, bS): _qp(-2 * l)},
        (b, bS): bbs,
        (bS, b): bsb,
    }
    return Presentation(
        name=f"WP[{k},{l}]",
        alphabet=(a, b, bS),
        star={a: a, b: bS, bS: b},
        rules=rules,
        grading={a: 0, b: 0, bS: 0},
        fine_grading={a: (0,), b: (1,), bS: (-1,)},
        params={"k": k, "l": l},
        key=("WP", k, l),
    )


@lru_cache(maxsize=None)
def lens(l: int) -> Presentation:
    """O(L_q(l;1,l)) on ``c, cS, d, dS``, graded by ``c -> u``, ``d -> u^-1``."""
    if l < 1:
        raise ValueError(f"l must be positive, got {l}")
    c, cS, d, dS = "c", "cS", "d", "dS"
    dds = (d, dS)
    rules = {
        (d, c): {(c, d): _qp(-l)},
        (dS, c): {(c, dS): _qp(-l)},
        (d, cS): {(cS, d): _qp(l)},
        (dS, cS): {(cS, dS): _qp(l)},
        (dS, d): {(d, dS): ONE},
        (c, cS): _sorted_dd(poly_in(dds, [_qp(2 * m, -1) for m in range(l)])),
        (cS, c): _sorted_dd(poly_in(dds, [_qp(-2 * m, -1) for m in range(1, l + 1)])),
    }
    return Presentation(
        name=f"Lens[{l}]",
        alphabet=(c, cS, d, dS),
        star={c: cS, cS: c, d: dS, dS: d},
        rules=rules,
        grading={c: 1, cS: -1, d: -1, dS: 1},
        fine_grading={c: (1, 0), cS: (-1, 0), d: (0, 1), dS: (0, -1)},
        params={"l": l},
        key=("Lens", l),
    )


def _sorted_dd(terms: Dict[Word, LaurentPoly]) -> Dict[Word, LaurentPoly]:
    # (d dS)^j rewritten as d^j dS^j, which is its normal form
    out = {}
    for w, c in terms.items():
        j = len(w) // 2
        out[("d",) * j + ("dS",) * j] = c
    return out


def make_presentation(kind: str, k: int = 1, l: int = 1) -> Presentation:
    """``kind`` is ``"SUq2"``, ``"WP"`` or ``"Lens"`` (case-insensitive aliases accepted)."""
    kind_l = kind.lower()
    if kind_l in ("suq2", "su2", "su"):
        return su2(k, l)
    if kind_l in ("wp", "teardrop"):
        return wp(k, l)
    if kind_l in ("lens", "l"):
        return lens(l)
    raise ValueError(f"unknown presentation kind {kind!r}")
