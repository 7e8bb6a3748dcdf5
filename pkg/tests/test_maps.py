from __future__ import annotations

import random

import pytest

from teardrop.ncalg import AlgebraMap, embed, iota, kappa, lens, parse_element, random_element, su2, theta, wp, wp_from_lens

EMBED_PARAMS = [(1, 1), (1, 2), (2, 1), (1, 3), (3, 2), (2, 5)]


@pytest.mark.parametrize("k,l", EMBED_PARAMS)
def test_theta_respects_relations(k, l):
    m = theta(k, l)
    assert m.relation_defects() == []
    assert m.star_defects() == []


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_iota_and_kappa_respect_relations(l):
    for m in (iota(l), kappa(l)):
        assert m.relation_defects() == []
        assert m.star_defects() == []


def test_theta_images():
    S = su2(2, 3)
    x = theta(2, 3)(wp(2, 3).gen("b"))
    assert x == S.word("alpha", "alpha", "alpha", "beta", "beta")
    assert theta(2, 3)(wp(2, 3).gen("a")) == S.word("beta", "betaS")


@pytest.mark.parametrize("k,l", [(1, 2), (2, 3)])
def test_theta_injective_on_basis(k, l):
    W = wp(k, l)
    m = theta(k, l)
    words = W.normal_words(10)
    rng = random.Random(3)
    sample = rng.sample(words, 50)
    images = {}
    for w in sample:
        img = m.image_of_word(w)
        assert img.is_monomial()
        (tw,) = img.support()
        assert tw not in images
        images[tw] = w
        assert m.preimage(img) == W.element({w: 1})


def test_theta_is_multiplicative():
    W = wp(1, 2)
    m = theta(1, 2)
    rng = random.Random(5)
    for _ in range(20):
        x, y = random_element(W, 3, rng), random_element(W, 3, rng)
        assert m(x * y) == m(x) * m(y)
        assert m(x.star()) == m(x).star()


def test_kappa_assignment():
    # a must go to dd* and b to cd; the opposite assignment breaks the relations
    L, W = lens(2), wp(1, 2)
    good = kappa(2)
    assert good(W.gen("a")) == L.word("d", "dS")
    assert good(W.gen("b")) == L.word("c", "d")
    swapped = AlgebraMap("swapped", W, L, {"a": L.word("c", "d"), "b": L.word("d", "dS"),
                                          "bS": L.word("d", "dS")})
    assert swapped.relation_defects() != []


def test_wp_from_lens_roundtrip():
    L = lens(3)
    x = parse_element(L, "c*d + q*d*dS - cS*dS")
    y = wp_from_lens(x)
    assert kappa(3)(y) == x
    with pytest.raises(ValueError):
        wp_from_lens(L.gen("c"))


def test_embed_dispatch():
    W = wp(1, 2)
    assert embed("theta", W.gen("a")) == su2(1, 2).word("beta", "betaS")
    assert embed("kappa", W.gen("a")) == lens(2).word("d", "dS")
    assert embed("iota", lens(2).gen("d")) == su2(1, 2).word("beta")
    with pytest.raises(ValueError):
        embed("kappa", wp(2, 3).gen("a"))
    with pytest.raises(ValueError):
        embed("iota", W.gen("a"))
    with pytest.raises(ValueError):
        embed("phi", W.gen("a"))


def test_map_rejects_foreign_element():
    with pytest.raises(ValueError):
        theta(1, 2)(wp(1, 3).gen("a"))
