from __future__ import annotations

import random
from fractions import Fraction

import pytest

from oracles import geometric_trace
from teardrop.chern import (
    TauFunctional,
    a_polynomial,
    chern_pairing,
    chern_pairing_n,
    jackson_hat_tau,
    jackson_integral,
    jackson_limit,
    tau,
    tau_numeric_crosscheck,
)
from teardrop.ncalg import parse_element, random_element, su2, wp
from teardrop.qlaurent import ONE, RatQ, as_ratq, q


def test_tau_values():
    W = wp(1, 2)
    for s in (1, 2):
        assert tau(s, W.gen("a")) == RatQ(q ** (2 * s), 1 - q ** 4)
        assert tau(s, W.one()) == 0
        assert tau(s, parse_element(W, "a^2*bS")) == 0


def test_tau_matches_geometric_series():
    W = wp(2, 3)
    for s in (1, 2, 3):
        for m in (1, 2, 3):
            v = tau(s, W.word(*("a",) * m)).eval(Fraction(1, 3))
            # the tail beyond 60 terms is far below the comparison
            assert abs(v - geometric_trace(m, s, 3, Fraction(1, 3), 60)) < Fraction(1, 10 ** 100)


def test_tau_validation():
    with pytest.raises(ValueError):
        tau(3, wp(1, 2).gen("a"))
    with pytest.raises(ValueError):
        TauFunctional(1, 2, 1)(wp(1, 3).gen("a"))
    with pytest.raises(ValueError):
        tau(1, su2().gen("alpha"))


@pytest.mark.parametrize("k,l", [(1, 1), (1, 2), (2, 3)])
def test_trace_property(k, l):
    W = wp(k, l)
    rng = random.Random(2024)
    for _ in range(100):
        x, y = random_element(W, 3, rng), random_element(W, 3, rng)
        for s in range(1, l + 1):
            assert tau(s, x * y - y * x) == 0


def test_factorization_through_polynomials():
    W = wp(2, 3)
    for w in W.normal_words(6):
        if any(x != "a" for x in w):
            for s in (1, 2, 3):
                assert tau(s, W.element({w: 1})) == 0


@pytest.mark.parametrize("l", [1, 2, 3, 5])
def test_k_independence(l):
    for s in range(1, l + 1):
        for m in range(0, 6):
            x1 = wp(1, l).word(*("a",) * m)
            x3 = wp(3 if l % 3 else 2, l).word(*("a",) * m)
            assert tau(s, x1) == tau(s, x3)


@pytest.mark.parametrize("l,s,m", [(1, 1, 1), (2, 2, 2), (3, 1, 4), (3, 3, 3)])
def test_numeric_crosscheck(l, s, m):
    assert tau_numeric_crosscheck(s, m, 256, Fraction(1, 2), 1, l) <= 1e-12


def test_numeric_crosscheck_tail():
    e8 = tau_numeric_crosscheck(1, 1, 8, Fraction(1, 2), 1, 1)
    e9 = tau_numeric_crosscheck(1, 1, 9, Fraction(1, 2), 1, 1)
    assert e9 / e8 == pytest.approx(0.25, rel=1e-6)
    with pytest.raises(ValueError):
        tau_numeric_crosscheck(1, 0)


def test_jackson_closed_form_examples():
    assert jackson_hat_tau(1, [0, 1], 1) == RatQ(q ** 2, 1 - q ** 2)
    assert jackson_hat_tau(1, [1], 2) == 0
    assert jackson_hat_tau(1, [0, 0, 0, 1], 2) == RatQ(q ** 6, 1 - q ** 12)
    assert jackson_hat_tau(1, [0, 0, 0, 1], 2) == tau(1, wp(1, 2).word("a", "a", "a"))
    with pytest.raises(ValueError):
        jackson_integral({-2: 1}, as_ratq(q), as_ratq(q ** 2))
    with pytest.raises(ValueError):
        jackson_hat_tau(3, [1], 2)


def test_jackson_defining_sum():
    x, Q = 0.25, 0.0625
    for j in (-1, 0, 1, 2, 5):
        closed = float(jackson_integral({j: 1}, Fraction(1, 4), Fraction(1, 16)).eval(1))
        assert jackson_limit({j: 1.0}, x, Q) == pytest.approx(closed, abs=1e-11)


@pytest.mark.parametrize("l", [1, 2, 3])
def test_jackson_consistency(l):
    rng = random.Random(99 + l)
    W = wp(1, l)
    for _ in range(50):
        deg = rng.randint(0, 6)
        coeffs = [as_ratq(rng.randint(-4, 4)) * q ** rng.randint(-3, 3) for _ in range(deg + 1)]
        f = sum((W.word(*("a",) * m).scale(c) for m, c in enumerate(coeffs)), W.zero())
        for s in range(1, l + 1):
            assert jackson_hat_tau(s, f, l) == tau(s, f)
            assert jackson_hat_tau(s, coeffs, l) == tau(s, f)


def test_a_polynomial_rejects_b():
    with pytest.raises(ValueError):
        a_polynomial(wp(1, 2).gen("b"))
    assert a_polynomial({2: 1, 0: 0}) == {2: ONE}


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_chern_pairing(l):
    for s in range(1, l + 1):
        assert chern_pairing(l, s) == ONE


def test_higher_pairings_are_computed():
    # no closed form to compare with; only check the values are exact constants
    for n in (-1, 2):
        v = chern_pairing_n(2, 1, n)
        assert v.is_polynomial() and v.as_laurent().is_constant()
