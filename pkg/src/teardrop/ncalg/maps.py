"""Algebra maps between the presentations.

``theta``: WP(k,l) -> SU_q(2), ``a -> beta betaS``, ``b -> alpha^l beta^k``.
``iota``:  Lens(l) -> SU_q(2), ``c -> alpha^l``, ``d -> beta``.
``kappa``: WP(1,l) -> Lens(l), ``a -> d dS``, ``b -> c d``.

Each map sends the normal words of its source to scalar multiples of single
normal words, which makes :meth:`AlgebraMap.preimage` a dictionary lookup.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

from ..qlaurent import RatQ, as_ratq
from .core import NcElement, Presentation, Word, _acc
from .families import lens, su2, wp

__all__ = ["AlgebraMap", "theta", "iota", "kappa", "embed", "wp_from_lens"]


class AlgebraMap:
    """A *-algebra map determined by the images of the generators."""

    def __init__(self, name: str, source: Presentation, target: Presentation, images: Mapping[str, NcElement]):
        self.name = name
        self.source = source
        self.target = target
        self.images = dict(images)
        self._word_cache: Dict[Word, NcElement] = {(): target.one()}
        self._inverse: Dict[Word, Tuple[Word, RatQ]] = {}
        self._inverse_len = -1

    def image_of_word(self, w: Word) -> NcElement:
        hit = self._word_cache.get(w)
        if hit is None:
            hit = self.image_of_word(w[:-1]) * self.images[w[-1]]
            self._word_cache[w] = hit
        return hit

    def __call__(self, x: NcElement) -> NcElement:
        if x.presentation != self.source:
            raise ValueError(f"{self.name} expects an element of {self.source.name}")
        out = self.target.zero()
        for w, c in x.terms.items():
            out = out + self.image_of_word(w).scale(c)
        return out

    def relation_defects(self) -> List[Tuple[Tuple[str, str], NcElement]]:
        """Images ``f(lhs) - f(rhs)`` of every source rule that fail to vanish."""
        bad = []
        for lhs, rhs in self.source.rules.items():
            img = self.image_of_word(lhs)
            for w, c in rhs.items():
                img = img - self.image_of_word(w).scale(c)
            if not img.is_zero():
                bad.append((lhs, img))
        return bad

    def star_defects(self) -> List[str]:
        return [g for g in self.source.alphabet
                if self.images[self.source.star[g]] != self.images[g].star()]

    def _extend_inverse(self, length: int) -> None:
        # every generator image has words of at least `shortest` letters, so a
        # target word of this length can only come from shorter source words
        shortest = min(min(len(w) for w in img.terms) for img in self.images.values())
        length = length // max(shortest, 1)
        if length <= self._inverse_len:
            return
        for w in self.source.normal_words(length):
            if len(w) <= self._inverse_len:
                continue
            img = self.image_of_word(w)
            if not img.is_monomial():
                raise ValueError(f"{self.name}({w}) is not a single scaled word")
            (tw, c), = img.terms.items()
            if tw in self._inverse:
                raise ValueError(f"{self.name} is not injective on basis words")
            self._inverse[tw] = (w, c)
        self._inverse_len = length

    def preimage(self, x: NcElement) -> NcElement:
        """Exact inverse on the image; raises if ``x`` is not in the image."""
        if x.presentation != self.target:
            raise ValueError(f"preimage under {self.name} expects an element of {self.target.name}")
        self._extend_inverse(x.max_length())
        out: Dict[Word, RatQ] = {}
        for tw, c in x.terms.items():
            hit = self._inverse.get(tw)
            if hit is None:
                raise ValueError(f"word {tw} is not in the image of {self.name}")
            sw, scale = hit
            _acc(out, sw, c / scale)
        return NcElement(self.source, out)

    def __repr__(self):
        return f"AlgebraMap({self.name}: {self.source.name} -> {self.target.name})"


@lru_cache(maxsize=None)
def theta(k: int, l: int) -> AlgebraMap:
    src, tgt = wp(k, l), su2(k, l)
    b = tgt.word(*(("alpha",) * l + ("beta",) * k))
    return AlgebraMap(
        "theta", src, tgt,
        {"a": tgt.word("beta", "betaS"), "b": b, "bS": b.star()},
    )


@lru_cache(maxsize=None)
def iota(l: int) -> AlgebraMap:
    src, tgt = lens(l), su2(1, l)
    return AlgebraMap(
        "iota", src, tgt,
        {
            "c": tgt.word(*("alpha",) * l),
            "cS": tgt.word(*("alphaS",) * l),
            "d": tgt.word("beta"),
            "dS": tgt.word("betaS"),
        },
    )


@lru_cache(maxsize=None)
def kappa(l: int) -> AlgebraMap:
    src, tgt = wp(1, l), lens(l)
    b = tgt.word("c", "d")
    return AlgebraMap("kappa", src, tgt, {"a": tgt.word("d", "dS"), "b": b, "bS": b.star()})


def embed(which: str, x: NcElement) -> NcElement:
    """Apply ``theta``, ``iota`` or ``kappa`` with parameters read off ``x``."""
    params = x.presentation.params
    if which == "theta":
        if x.presentation.key[0] != "WP":
            raise ValueError("theta is defined on WP(k,l)")
        return theta(params["k"], params["l"])(x)
    if which == "iota":
        if x.presentation.key[0] != "Lens":
            raise ValueError("iota is defined on Lens(l)")
        return iota(params["l"])(x)
    if which == "kappa":
        if x.presentation.key[0] != "WP":
            raise ValueError("kappa is defined on WP(1,l)")
        if params["k"] != 1:
            raise ValueError(f"kappa requires k=1, got k={params['k']}")
        return kappa(params["l"])(x)
    raise ValueError(f"unknown map {which!r}")


def wp_from_lens(x: NcElement) -> NcElement:
    """Identify a coinvariant element of Lens(l) with an element of WP(1,l)."""
    if x.presentation.key[0] != "Lens":
        raise ValueError("wp_from_lens expects an element of Lens(l)")
    if not x.is_coinvariant():
        raise ValueError("element is not coinvariant")
    return kappa(x.presentation.params["l"]).preimage(x)
