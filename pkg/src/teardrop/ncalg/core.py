"""Finitely presented graded *-algebras with quadratic rewriting rules.

Words are tuples of generator names.  Every rewrite rule has a left-hand side
of length two, so a word is in normal form exactly when none of its adjacent
letter pairs is a rule head.  Normal forms of words have Laurent polynomial
coefficients; elements carry coefficients in Q(q).
"""
from __future__ import annotations

import random
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..qlaurent import ONE, LaurentPoly, RatQ, as_ratq

Word = Tuple[str, ...]
Rule = Dict[Word, LaurentPoly]

__all__ = [
    "Word",
    "Presentation",
    "NcElement",
    "TensorElement",
    "word_str",
]


class Presentation:
    """Generators, involution, quadratic rewrite rules and integer gradings.

    ``grading`` is the circle coaction written as a degree per generator.
    ``fine_grading`` is a finer multigrading (letter-count differences) under
    which every rule is homogeneous; it is used to split linear problems into
    independent blocks.
    """

    def __init__(
        self,
        name: str,
        alphabet: Sequence[str],
        star: Mapping[str, str],
        rules: Mapping[Tuple[str, str], Mapping[Word, LaurentPoly]],
        grading: Mapping[str, int],
        fine_grading: Mapping[str, Tuple[int, ...]],
        params: Mapping[str, int],
        key: tuple,
    ):
        self.name = name
        self.alphabet = tuple(alphabet)
        self.star = dict(star)
        self.rules: Dict[Tuple[str, str], Rule] = {
            lhs: {tuple(w): c for w, c in rhs.items() if c} for lhs, rhs in rules.items()
        }
        self.grading = dict(grading)
        self.fine_grading = {g: tuple(v) for g, v in fine_grading.items()}
        self.params = dict(params)
        self.key = key
        self._append_cache: Dict[Tuple[Word, str], Dict[Word, LaurentPoly]] = {}
        self._concat_cache: Dict[Tuple[Word, Word], Dict[Word, LaurentPoly]] = {}

    def __repr__(self):
        return f"Presentation({self.name})"

    def __eq__(self, other):
        return isinstance(other, Presentation) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    # -- words --------------------------------------------------------------
    def check_word(self, word: Iterable[str]) -> Word:
        word = tuple(word)
        for x in word:
            if x not in self.star:
                raise KeyError(f"unknown generator {x!r} for {self.name}")
        return word

    def is_normal(self, word: Word) -> bool:
        return all((word[i], word[i + 1]) not in self.rules for i in range(len(word) - 1))

    def degree(self, word: Word) -> int:
        return sum(self.grading[x] for x in word)

    def fine_degree(self, word: Word) -> Tuple[int, ...]:
        dim = len(next(iter(self.fine_grading.values())))
        out = [0] * dim
        for x in word:
            for i, v in enumerate(self.fine_grading[x]):
                out[i] += v
        return tuple(out)

    def star_word(self, word: Word) -> Word:
        return tuple(self.star[x] for x in reversed(word))

    def normal_words(self, max_len: int) -> List[Word]:
        """All irreducible words of length at most ``max_len``, shortest first."""
        out: List[Word] = [()]
        layer: List[Word] = [()]
        for _ in range(max_len):
            nxt = []
            for w in layer:
                for x in self.alphabet:
                    if not w or (w[-1], x) not in self.rules:
                        nxt.append(w + (x,))
            out.extend(nxt)
            layer = nxt
        return out

    # -- reduction ----------------------------------------------------------
    def _append(self, u: Word, x: str) -> Dict[Word, LaurentPoly]:
        """Normal form of ``u x`` for a normal word ``u``."""
        key = (u, x)
        hit = self._append_cache.get(key)
        if hit is not None:
            return hit
        if not u or (u[-1], x) not in self.rules:
            res = {u + (x,): ONE}
        else:
            res = {}
            head = u[:-1]
            for rword, c in self.rules[(u[-1], x)].items():
                for w, d in self._concat(head, rword).items():
                    _acc(res, w, c * d)
        self._append_cache[key] = res
        return res

    def _concat(self, u: Word, v: Word) -> Dict[Word, LaurentPoly]:
        """Normal form of ``u v`` for a normal word ``u`` and any word ``v``."""
        if not v:
            return {u: ONE}
        key = (u, v)
        hit = self._concat_cache.get(key)
        if hit is not None:
            return hit
        cur: Dict[Word, LaurentPoly] = {u: ONE}
        for x in v:
            nxt: Dict[Word, LaurentPoly] = {}
            for w, c in cur.items():
                for w2, d in self._append(w, x).items():
                    _acc(nxt, w2, c * d)
            cur = nxt
        self._concat_cache[key] = cur
        return cur

    def reduce_word(self, word: Iterable[str]) -> Dict[Word, LaurentPoly]:
        """Normal form of a word, built letter by letter from the left."""
        return self._concat((), self.check_word(word))

    def reduce_word_random(self, word: Iterable[str], rng: random.Random) -> Dict[Word, LaurentPoly]:
        """Normal form by rewriting a randomly chosen redex at every step.

        Shares no cache with :meth:`reduce_word`; used to test confluence.
        """
        pending: Dict[Word, LaurentPoly] = {self.check_word(word): ONE}
        done: Dict[Word, LaurentPoly] = {}
        while pending:
            # visit a shuffled snapshot; words created meanwhile wait for the next round
            batch = list(pending)
            rng.shuffle(batch)
            for w in batch:
                c = pending.pop(w, None)
                if c is None:
                    continue
                redexes = [i for i in range(len(w) - 1) if (w[i], w[i + 1]) in self.rules]
                if not redexes:
                    _acc(done, w, c)
                    continue
                i = rng.choice(redexes)
                for rword, d in self.rules[(w[i], w[i + 1])].items():
                    _acc(pending, w[:i] + rword + w[i + 2:], c * d)
        return done

    # -- element constructors -------------------------------------------------
    def element(self, terms: Mapping[Iterable[str], object] | None = None) -> "NcElement":
        """Element from arbitrary (not necessarily normal) words."""
        acc: Dict[Word, RatQ] = {}
        for w, c in (terms or {}).items():
            c = as_ratq(c)
            if c.is_zero():
                continue
            for nw, d in self.reduce_word(w).items():
                _acc(acc, nw, c * d)
        return NcElement(self, acc)

    def word(self, *letters: str) -> "NcElement":
        return self.element({tuple(letters): 1})

    def gen(self, name: str) -> "NcElement":
        return self.word(name)

    def one(self) -> "NcElement":
        return NcElement(self, {(): as_ratq(1)})

    def zero(self) -> "NcElement":
        return NcElement(self, {})

    def scalar(self, c) -> "NcElement":
        return self.element({(): c})


def _acc(d: dict, key, val) -> None:
    s = d.get(key)
    s = val if s is None else s + val
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def word_str(word: Word) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        parts.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return "*".join(parts)


def _coeff_str(c: RatQ) -> str:
    s = str(c)
    if c.den.is_one() and c.num.is_monomial():
        return s
    return f"({s})"


class NcElement:
    """A finite combination of normal words with coefficients in Q(q)."""

    __slots__ = ("presentation", "terms")

    def __init__(self, presentation: Presentation, terms: Dict[Word, RatQ]):
        # callers guarantee normal words and nonzero RatQ coefficients
        self.presentation = presentation
        self.terms = terms

    # -- inspection -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Iterable[str]) -> RatQ:
        return self.terms.get(tuple(word), as_ratq(0))

    def constant_term(self) -> RatQ:
        return self.coefficient(())

    def support(self) -> List[Word]:
        return sorted(self.terms, key=lambda w: (len(w), w))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degrees(self) -> set:
        return {self.presentation.degree(w) for w in self.terms}

    def is_coinvariant(self) -> bool:
        return all(self.presentation.degree(w) == 0 for w in self.terms)

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    # -- arithmetic -------------------------------------------------------------
    def _check(self, other: "NcElement"):
        if other.presentation != self.presentation:
            raise ValueError(
                f"mixed presentations: {self.presentation.name} vs {other.presentation.name}"
            )

    def _lift(self, other):
        if isinstance(other, NcElement):
            self._check(other)
            return other
        try:
            c = as_ratq(other)
        except TypeError:
            return NotImplemented
        return NcElement(self.presentation, {(): c} if c else {})

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return NcElement(self.presentation, out)

    __radd__ = __add__

    def __neg__(self):
        return NcElement(self.presentation, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "NcElement":
        c = as_ratq(c)
        if c.is_zero():
            return NcElement(self.presentation, {})
        return NcElement(self.presentation, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NcElement):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        pres = self.presentation
        out: Dict[Word, RatQ] = {}
        for u, c in self.terms.items():
            for v, d in other.terms.items():
                cd = c * d
                for w, e in pres._concat(u, v).items():
                    _acc(out, w, cd * e)
        return NcElement(pres, out)

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = self.presentation.one()
        for _ in range(n):
            out = out * self
        return out

    def star(self) -> "NcElement":
        """Involution; coefficients are real so only words are reversed and starred."""
        pres = self.presentation
        out: Dict[Word, RatQ] = {}
        for w, c in self.terms.items():
            for nw, d in pres.reduce_word(pres.star_word(w)).items():
                _acc(out, nw, c * d)
        return NcElement(pres, out)

    # -- comparison -------------------------------------------------------------
    def __eq__(self, other):
        other = self._lift(other) if not isinstance(other, NcElement) else other
        if other is NotImplemented:
            return NotImplemented
        return self.presentation == other.presentation and self.terms == other.terms

    def __hash__(self):
        return hash((self.presentation, frozenset(self.terms.items())))

    def __repr__(self):
        return f"NcElement[{self.presentation.name}]({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for i, w in enumerate(self.support()):
            c = self.terms[w]
            neg = c.den.is_one() and c.num.is_monomial() and next(iter(c.num.coeffs.values())) < 0
            if neg:
                c = -c
            if not w:
                body = _coeff_str(c)
            elif c == 1:
                body = word_str(w)
            else:
                body = f"{_coeff_str(c)} * {word_str(w)}"
            if i == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out


class TensorElement:
    """A finite sum of ``coeff * left (x) right`` with normal-word legs."""

    __slots__ = ("presentation", "terms")

    def __init__(self, presentation: Presentation, terms: Optional[Dict[Tuple[Word, Word], RatQ]] = None):
        self.presentation = presentation
        self.terms: Dict[Tuple[Word, Word], RatQ] = dict(terms or {})

    @classmethod
    def from_terms(
        cls, presentation: Presentation, terms: Iterable[Tuple[object, Iterable[str], Iterable[str]]]
    ) -> "TensorElement":
        """Build from raw ``(coeff, left_word, right_word)`` triples, normal forming both legs."""
        out: Dict[Tuple[Word, Word], RatQ] = {}
        for c, left, right in terms:
            c = as_ratq(c)
            for lw, d in presentation.reduce_word(left).items():
                for rw, e in presentation.reduce_word(right).items():
                    _acc(out, (lw, rw), c * d * e)
        return cls(presentation, out)

    @classmethod
    def unit(cls, presentation: Presentation) -> "TensorElement":
        return cls(presentation, {((), ()): as_ratq(1)})

    def __iter__(self) -> Iterator[Tuple[RatQ, Word, Word]]:
        for (lw, rw), c in self.terms.items():
            yield c, lw, rw

    def __len__(self):
        return len(self.terms)

    def _check(self, other):
        if other.presentation != self.presentation:
            raise ValueError(
                f"mixed presentations: {self.presentation.name} vs {other.presentation.name}"
            )

    def __add__(self, other: "TensorElement"):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return TensorElement(self.presentation, out)

    def __neg__(self):
        return TensorElement(self.presentation, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = as_ratq(c)
        if c.is_zero():
            return TensorElement(self.presentation)
        return TensorElement(self.presentation, {k: v * c for k, v in self.terms.items()})

    def sandwich(self, left: NcElement, right: NcElement) -> "TensorElement":
        """``(left (x) 1) * self * (1 (x) right)``."""
        self._check(left)
        self._check(right)
        pres = self.presentation
        out: Dict[Tuple[Word, Word], RatQ] = {}
        for (lw, rw), c in self.terms.items():
            lefts: Dict[Word, RatQ] = {}
            for u, a in left.terms.items():
                for w, e in pres._concat(u, lw).items():
                    _acc(lefts, w, a * e)
            rights: Dict[Word, RatQ] = {}
            for v, b in right.terms.items():
                for w, e in pres._concat(rw, v).items():
                    _acc(rights, w, b * e)
            for w1, a in lefts.items():
                ca = c * a
                for w2, b in rights.items():
                    _acc(out, (w1, w2), ca * b)
        return TensorElement(self.presentation, out)

    def multiply(self) -> NcElement:
        """Apply the multiplication map ``x (x) y -> xy``."""
        pres = self.presentation
        out: Dict[Word, RatQ] = {}
        for (lw, rw), c in self.terms.items():
            for w, e in pres._concat(lw, rw).items():
                _acc(out, w, c * e)
        return NcElement(pres, out)

    def left_degree(self, lw: Word) -> int:
        return self.presentation.degree(lw)

    def right_degree(self, rw: Word) -> int:
        return self.presentation.degree(rw)

    def leg_degrees(self) -> List[Tuple[int, int]]:
        return [(self.left_degree(lw), self.right_degree(rw)) for (lw, rw) in self.terms]

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.presentation == other.presentation and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (lw, rw), c in self.terms.items():
            body = f"{word_str(lw)} (x) {word_str(rw)}"
            parts.append(body if c == 1 else f"{_coeff_str(c)} * {body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"TensorElement[{self.presentation.name}]({self})"


def t_normal_form(t: TensorElement) -> TensorElement:
    return TensorElement.from_terms(t.presentation, ((c, lw, rw) for c, lw, rw in t))


def t_multiply(t: TensorElement) -> NcElement:
    return t.multiply()
