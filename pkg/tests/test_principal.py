from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from oracles import su2_matrices
from teardrop.ncalg import TensorElement, lens, parse_element, su2, wp
from teardrop.principal import (
    almost_free_witness,
    canonical_map,
    galois_membership,
    idempotent,
    strong_connection,
    trace_formula,
    verify_strong,
)
from teardrop.qlaurent import q


def test_omega_one_step():
    L = lens(1)
    om = strong_connection(1, 1)
    expected = TensorElement.from_terms(L, [(1, ("cS",), ("c",)), (q ** -2, ("d",), ("dS",))])
    assert om == expected
    assert om.multiply() == L.one()


@pytest.mark.parametrize("l", [1, 2, 3])
def test_strong_connection_conditions(l):
    rep = verify_strong(l, 3)
    assert rep.ok, rep.violations()
    assert all(r["term_bound_ok"] for r in rep.rows)


def test_term_counts_l3():
    rep = verify_strong(3, 3)
    assert [r["terms"] for r in rep.rows] == [16, 9, 4, 1, 4, 9, 16]


def test_verify_strong_validation():
    with pytest.raises(ValueError):
        verify_strong(2, -1)


def test_e1_for_l1():
    E = idempotent(1, 1)
    W = wp(1, 1)
    assert E.entries == [[parse_element(W, "1 - a"), parse_element(W, "q^-2*b")],
                         [parse_element(W, "bS"), parse_element(W, "q^-2*a")]]


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_e1_idempotent_with_closed_form_trace(l):
    E = idempotent(l, 1)
    assert E.is_idempotent()
    assert E.trace() == trace_formula(l)


@pytest.mark.parametrize("l,n", [(1, 2), (2, 2), (1, -1), (2, -1), (1, -2)])
def test_higher_idempotents(l, n):
    assert idempotent(l, n).is_idempotent()


def test_canonical_map_degrees():
    S = su2(1, 1)
    t = TensorElement.from_terms(S, [(1, ("alphaS",), ("alpha",)), (q ** -2, ("beta",), ("betaS",))])
    assert canonical_map(t) == {1: S.one()}


def test_galois_member_for_hopf_fibration():
    cert = galois_membership(1, 1, 2)
    assert cert.member
    assert canonical_map(cert.witness) == {1: su2(1, 1).one()}
    assert all(m for _, m in cert.screening)


@pytest.mark.parametrize("k,l", [(2, 1), (2, 3), (3, 1)])
def test_galois_not_member_for_k_above_one(k, l):
    cert = galois_membership(k, l, 6)
    assert cert.verdict == "not-member-up-to-D"
    assert cert.witness is None
    assert not any(m for _, m in cert.screening)


@pytest.mark.parametrize("l", [2, 3])
def test_galois_witness_for_k_one(l):
    # exact elimination finds 1 (x) u in the image for rho_{1,l} at D = 2l
    cert = galois_membership(1, l, 2 * l)
    assert cert.member
    assert canonical_map(cert.witness) == {1: su2(1, l).one()}
    assert not galois_membership(1, l, 2 * l - 1).member


def test_galois_witness_numerically():
    # sum_i pi(x_i) pi(y_i) must be the identity away from the truncation edge
    cert = galois_membership(1, 2, 4)
    N, qv = 40, 0.5
    alpha, beta = su2_matrices(N, qv)
    gens = {"alpha": alpha, "alphaS": alpha.T, "beta": beta, "betaS": beta.T}

    def mat(word):
        out = np.eye(N)
        for x in word:
            out = out @ gens[x]
        return out

    total = np.zeros((N, N))
    for c, x, y in cert.witness:
        total += float(c.eval(Fraction(1, 2))) * mat(x) @ mat(y)
    assert np.abs(total - np.eye(N))[:, : N - 4].max() < 1e-12


def test_galois_validation():
    with pytest.raises(ValueError):
        galois_membership(1, 1, 0)


@pytest.mark.parametrize("l", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2])
def test_almost_free(l, m):
    assert almost_free_witness(l, m)


def test_almost_free_degree_bound():
    assert almost_free_witness(1, 1, D=2)
    assert not almost_free_witness(2, 1, D=1)
    with pytest.raises(ValueError):
        almost_free_witness(1, 0)
