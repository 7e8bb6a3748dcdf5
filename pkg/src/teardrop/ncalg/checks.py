"""Structural checks on a presentation: overlaps, star compatibility, homogeneity."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..qlaurent import LaurentPoly
from .core import NcElement, Presentation, Word, _acc

__all__ = [
    "CriticalPair",
    "confluence_check",
    "star_check",
    "homogeneity_check",
    "random_word",
    "random_element",
    "strategies_agree",
    "coinvariant_basis",
    "zl_degree",
]


@dataclass
class CriticalPair:
    word: Word
    difference: Dict[Word, LaurentPoly] = field(default_factory=dict)


def confluence_check(p: Presentation) -> List[CriticalPair]:
    """Resolve every overlap ``xyz`` of two rule heads; return the unresolved ones.

    All rule heads have length two, so overlaps are the only ambiguities.
    """
    unresolved = []
    for (x, y) in p.rules:
        for (y2, z) in p.rules:
            if y2 != y:
                continue
            left: Dict[Word, LaurentPoly] = {}
            for w, c in p.rules[(x, y)].items():
                for nw, d in p.reduce_word(w + (z,)).items():
                    _acc(left, nw, c * d)
            right: Dict[Word, LaurentPoly] = {}
            for w, c in p.rules[(y, z)].items():
                for nw, d in p.reduce_word((x,) + w).items():
                    _acc(right, nw, c * d)
            diff = dict(left)
            for w, c in right.items():
                _acc(diff, w, -c)
            if diff:
                unresolved.append(CriticalPair((x, y, z), diff))
    return unresolved


def star_check(p: Presentation) -> List[Tuple[str, str]]:
    """Rules whose starred version is not a consequence of the rules."""
    bad = []
    for lhs, rhs in p.rules.items():
        lhs_el = p.element({p.star_word(lhs): 1})
        rhs_el = p.element({p.star_word(w): c for w, c in rhs.items()})
        if not (lhs_el - rhs_el).is_zero():
            bad.append(lhs)
    return bad


def homogeneity_check(p: Presentation) -> List[Tuple[str, str]]:
    """Rules that do not preserve the circle grading or the fine grading."""
    bad = []
    for lhs, rhs in p.rules.items():
        for w in rhs:
            if p.degree(w) != p.degree(lhs) or p.fine_degree(w) != p.fine_degree(lhs):
                bad.append(lhs)
                break
    return bad


def random_word(p: Presentation, length: int, rng: random.Random) -> Word:
    return tuple(rng.choice(p.alphabet) for _ in range(length))


def random_element(p: Presentation, max_len: int, rng: random.Random, max_terms: int = 4,
                   coeff_range: int = 5) -> NcElement:
    """Nonzero combination of up to ``max_terms`` distinct normal words with small integer coefficients."""
    words = p.normal_words(max_len)
    picked = rng.sample(words, rng.randint(1, min(max_terms, len(words))))
    coeffs = [rng.choice([c for c in range(-coeff_range, coeff_range + 1) if c]) for _ in picked]
    return p.element(dict(zip(picked, coeffs)))


def strategies_agree(p: Presentation, n_words: int, max_len: int, seed: int = 0) -> List[Word]:
    """Reduce random words by the incremental and the random-redex strategies.

    Returns the words on which the two normal forms differ (expected: none).
    """
    rng = random.Random(seed)
    bad = []
    for _ in range(n_words):
        w = random_word(p, rng.randint(0, max_len), rng)
        if p.reduce_word(w) != p.reduce_word_random(w, rng):
            bad.append(w)
    return bad


def coinvariant_basis(p: Presentation, max_len: int) -> List[Word]:
    """Degree-zero normal words of length at most ``max_len``."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    return [w for w in p.normal_words(max_len) if p.degree(w) == 0]


def zl_degree(word: Word, l: int) -> int:
    """Degree under ``alpha -> alpha (x) w`` with ``w^l = 1``: net alpha count mod l."""
    net = sum(1 if x == "alpha" else -1 if x == "alphaS" else 0 for x in word)
    return net % l


def is_coinvariant(x: NcElement) -> bool:
    return x.is_coinvariant()
