"""Strong connections on the quantum lens space, their idempotents, and freeness tests.

Coactions of the circle are integer gradings, so the colinearity conditions on
a strong connection reduce to statements about the degrees of its legs, and
the canonical map sends ``x (x) y`` to ``xy (x) u^deg(y)`` for a homogeneous
word ``y``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .exact_linalg import EchelonBasis
from .ncalg import NcElement, TensorElement, iota, lens, su2, wp, wp_from_lens
from .ncalg.core import Word, _acc
from .qlaurent import LaurentPoly, RatQ, as_ratq, qbinom

__all__ = [
    "StrongConnection",
    "strong_connection",
    "verify_strong",
    "IdempotentMatrix",
    "idempotent",
    "trace_idempotent",
    "trace_formula",
    "canonical_map",
    "GaloisCertificate",
    "galois_membership",
    "almost_free_witness",
]


class StrongConnection:
    """The recursively defined strong connection ``n -> omega(u^n)`` on Lens(l)."""

    def __init__(self, l: int):
        if l < 1:
            raise ValueError("l must be positive")
        self.l = l
        self.presentation = lens(l)
        self.cache: Dict[int, TensorElement] = {0: TensorElement.unit(self.presentation)}
        L = self.presentation
        self._up = []    # (coeff, left multiplier) for positive steps
        self._down = []  # same for negative steps
        for m in range(1, l + 1):
            sign = -1 if m % 2 else 1
            c_up = -sign * LaurentPoly.monomial(-m * (m + 1)) * qbinom(l, m, -2)
            self._up.append(L.word(*(("d",) * m + ("dS",) * (m - 1))).scale(c_up))
            c_dn = -sign * LaurentPoly.monomial(m * (m - 1)) * qbinom(l, m, 2)
            self._down.append(L.word(*(("d",) * (m - 1) + ("dS",) * m)).scale(c_dn))

    def omega(self, n: int) -> TensorElement:
        if n in self.cache:
            return self.cache[n]
        L = self.presentation
        if n > 0:
            prev = self.omega(n - 1)
            out = prev.sandwich(L.gen("cS"), L.gen("c"))
            for left in self._up:
                out = out + prev.sandwich(left, L.gen("dS"))
        else:
            prev = self.omega(n + 1)
            out = prev.sandwich(L.gen("c"), L.gen("cS"))
            for left in self._down:
                out = out + prev.sandwich(left, L.gen("d"))
        self.cache[n] = out
        return out

    __call__ = omega


_CONNECTIONS: Dict[int, StrongConnection] = {}


def strong_connection(l: int, n: int) -> TensorElement:
    if l not in _CONNECTIONS:
        _CONNECTIONS[l] = StrongConnection(l)
    return _CONNECTIONS[l].omega(n)


@dataclass
class StrongReport:
    l: int
    n_max: int
    rows: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r["mu_ok"] and r["left_ok"] and r["right_ok"] for r in self.rows)

    def violations(self) -> List[dict]:
        return [r for r in self.rows if not (r["mu_ok"] and r["left_ok"] and r["right_ok"])]


def verify_strong(l: int, n_max: int) -> StrongReport:
    """Check ``mu(omega(u^n)) = 1`` and the leg degrees for all ``|n| <= n_max``."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    report = StrongReport(l, n_max)
    for n in range(-n_max, n_max + 1):
        om = strong_connection(l, n)
        degs = om.leg_degrees()
        report.rows.append({
            "n": n,
            "terms": len(om),
            "mu_ok": om.multiply() == 1,
            "left_ok": all(dl == -n for dl, _ in degs),
            "right_ok": all(dr == n for _, dr in degs),
            "term_bound_ok": len(om) <= (l + 1) ** abs(n),
        })
    return report


@dataclass
class IdempotentMatrix:
    """``E[n]_{ij} = r_i * l_j`` from ``omega(u^n) = sum_i l_i (x) r_i``.

    Coefficients of ``omega`` are absorbed into the left legs.  ``entries``
    live in WP(1,l); ``lens_entries`` are the same elements inside Lens(l).
    """

    l: int
    n: int
    lens_entries: List[List[NcElement]]
    entries: List[List[NcElement]]

    @property
    def size(self) -> int:
        return len(self.entries)

    def square(self) -> List[List[NcElement]]:
        E = self.entries
        N = self.size
        zero = wp(1, self.l).zero()
        return [[sum((E[i][k] * E[k][j] for k in range(N)), zero) for j in range(N)] for i in range(N)]

    def is_idempotent(self) -> bool:
        return self.square() == self.entries

    def trace(self) -> NcElement:
        return sum((self.entries[i][i] for i in range(self.size)), wp(1, self.l).zero())


def idempotent(l: int, n: int) -> IdempotentMatrix:
    om = strong_connection(l, n)
    L = lens(l)
    lefts = [L.element({lw: c}) for c, lw, _ in om]
    rights = [L.element({rw: 1}) for _, _, rw in om]
    lens_entries = [[r * lft for lft in lefts] for r in rights]
    for row in lens_entries:
        for x in row:
            if not x.is_coinvariant():
                raise AssertionError(f"non-coinvariant idempotent entry {x}")
    entries = [[wp_from_lens(x) for x in row] for row in lens_entries]
    return IdempotentMatrix(l, n, lens_entries, entries)


def trace_idempotent(E: IdempotentMatrix) -> NcElement:
    return E.trace()


def trace_formula(l: int) -> NcElement:
    """``1 + sum_m (-1)^m q^{m(m-1)} (1 - q^{-2ml}) C(l,m)_{q^2} a^m`` in WP(1,l)."""
    W = wp(1, l)
    out = W.one()
    for m in range(1, l + 1):
        c = (LaurentPoly.monomial(m * (m - 1), (-1) ** m)
             * (1 - LaurentPoly.monomial(-2 * m * l)) * qbinom(l, m, 2))
        out = out + W.word(*("a",) * m).scale(c)
    return out


def canonical_map(t: TensorElement, grading=None) -> Dict[int, NcElement]:
    """Lifted canonical map ``x (x) y -> xy (x) u^deg(y)``, as ``{degree: element}``.

    ``grading`` defaults to the presentation's own grading; pass a callable on
    words to use another one.
    """
    pres = t.presentation
    deg = grading or pres.degree
    out: Dict[int, NcElement] = {}
    for c, lw, rw in t:
        d = deg(rw)
        piece = pres.element({lw + rw: c})
        out[d] = out[d] + piece if d in out else piece
    return {d: x for d, x in out.items() if not x.is_zero()}


@dataclass
class GaloisCertificate:
    k: int
    l: int
    D: int
    verdict: str
    witness: Optional[TensorElement]
    n_vectors: int
    rank: int
    screening: List[Tuple[Fraction, bool]] = field(default_factory=list)

    @property
    def member(self) -> bool:
        return self.verdict == "member"


def _candidate_pairs(k: int, l: int, D: int) -> List[Tuple[Word, Word]]:
    """Pairs of normal words ``(x, y)`` with ``deg y = 1``, ``|x|+|y| <= D`` and
    ``xy`` of fine degree zero.  Products of nonzero fine degree cannot
    contribute to the unit, since normal forms are fine-homogeneous.
    """
    S = su2(k, l)
    words = S.normal_words(D)
    by_fine: Dict[tuple, List[Word]] = {}
    for w in words:
        by_fine.setdefault(S.fine_degree(w), []).append(w)
    pairs = []
    for y in words:
        if S.degree(y) != 1:
            continue
        target = tuple(-v for v in S.fine_degree(y))
        for x in by_fine.get(target, []):
            if len(x) + len(y) <= D:
                pairs.append((x, y))
    return pairs


def galois_membership(k: int, l: int, D: int, screen_points: int = 3, seed: int = 0) -> GaloisCertificate:
    """Decide whether ``1 (x) u`` is hit by the canonical map on words of total length <= D.

    Equivalent to asking whether 1 lies in the span of ``{xy : deg y = 1}``.
    The system is first screened at random rational ``q`` in (0, 1), then
    settled by exact elimination over Q(q).
    """
    if D < 1:
        raise ValueError("D must be at least 1")
    S = su2(k, l)
    pairs = _candidate_pairs(k, l, D)
    products = {pair: S._concat(*pair) for pair in pairs}

    rng = random.Random(seed)
    screening = []
    for _ in range(screen_points):
        qv = Fraction(rng.randint(1, 97), 101)
        basis = EchelonBasis()
        for pair, vec in products.items():
            vals = {w: c.eval(qv) for w, c in vec.items()}
            basis.add({w: v for w, v in vals.items() if v}, pair, Fraction(1))
        screening.append((qv, basis.express({(): Fraction(1)}) is not None))

    basis = EchelonBasis()
    one = as_ratq(1)
    for pair, vec in products.items():
        basis.add({w: as_ratq(c) for w, c in vec.items()}, pair, one)
    combo = basis.express({(): one})
    witness = None
    if combo is not None:
        witness = TensorElement(S, {})
        for (x, y), c in combo.items():
            _acc(witness.terms, (x, y), c)
        img = canonical_map(witness)
        if img != {1: S.one()}:
            raise AssertionError(f"witness does not map to 1 (x) u: {img}")
    return GaloisCertificate(
        k, l, D,
        "member" if witness is not None else "not-member-up-to-D",
        witness, len(pairs), basis.rank, screening,
    )


def almost_free_witness(l: int, m: int, D: Optional[int] = None) -> bool:
    """Push ``omega(u^m)`` into SU_q(2) leg-wise and check it maps to ``1 (x) u^{ml}``.

    With ``D`` given, additionally require every term to have total length <= D.
    """
    if m < 1:
        raise ValueError("m must be positive")
    om = strong_connection(l, m)
    emb = iota(l)
    S = emb.target
    pushed = TensorElement(S, {})
    for c, lw, rw in om:
        left = emb.image_of_word(lw)
        right = emb.image_of_word(rw)
        for w1, a in left.terms.items():
            for w2, b in right.terms.items():
                _acc(pushed.terms, (w1, w2), c * a * b)
    if D is not None and any(len(a) + len(b) > D for _, a, b in pushed):
        return False
    return canonical_map(pushed) == {m * l: S.one()}
