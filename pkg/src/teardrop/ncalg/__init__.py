"""Graded *-algebras given by generators and quadratic rewriting rules."""
from .checks import (
    coinvariant_basis,
    confluence_check,
    homogeneity_check,
    random_element,
    random_word,
    star_check,
    strategies_agree,
    zl_degree,
)
from .core import NcElement, Presentation, TensorElement, Word, t_multiply, t_normal_form, word_str
from .families import lens, make_presentation, su2, wp
from .maps import AlgebraMap, embed, iota, kappa, theta, wp_from_lens
from .parse import ExpressionError, parse_element


def normal_form(p: Presentation, x) -> NcElement:
    """Normal form of a word (sequence of generator names) or an expression string."""
    if isinstance(x, str):
        return parse_element(p, x)
    return p.element({tuple(x): 1})


def star_element(x: NcElement) -> NcElement:
    return x.star()


def degree(p: Presentation, word) -> int:
    return p.degree(tuple(word))


def is_coinvariant(x: NcElement) -> bool:
    return x.is_coinvariant()


__all__ = [
    "AlgebraMap",
    "ExpressionError",
    "NcElement",
    "Presentation",
    "TensorElement",
    "Word",
    "coinvariant_basis",
    "confluence_check",
    "degree",
    "embed",
    "homogeneity_check",
    "iota",
    "is_coinvariant",
    "kappa",
    "lens",
    "make_presentation",
    "normal_form",
    "parse_element",
    "random_element",
    "random_word",
    "star_check",
    "star_element",
    "strategies_agree",
    "su2",
    "t_multiply",
    "t_normal_form",
    "theta",
    "word_str",
    "wp",
    "wp_from_lens",
    "zl_degree",
]
