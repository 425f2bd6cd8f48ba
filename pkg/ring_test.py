"""Tests for canonical forms on the universal curve and the Gysin pushforwards."""

import random

import pytest

from hurwitz_strata.algebra import var
from hurwitz_strata.errors import MalformedClass, PoleObstruction
from hurwitz_strata.grr import OMEGA
from hurwitz_strata.ring import (
    G_SYMBOL,
    N_SYMBOL,
    YProduct,
    delta,
    genus0_identities,
    genus0_reduce,
    hodge_ch,
    p_push,
    parse_x_expression,
    psi,
    q_push_product,
    reduce,
    relative_chern_degree,
    total_chern_f,
    verify_relative_chern,
    xi,
)

S, P, PI, D, N = var('Σ'), var('Ψ'), var('Π'), var('Δ'), var('N')
n, g = var(N_SYMBOL), var(G_SYMBOL)


def test_reduce_applies_relations():
    assert reduce(S * PI).value == 0
    assert reduce(PI * D).value == 0
    assert reduce(PI**2).value == -P * PI
    assert reduce(S**2 * D).value == P**2 * D
    assert reduce(N * D + S).value == N * D + S


def test_reduce_replaces_omega():
    assert reduce(var(OMEGA)).value == S - P - 2 * PI


def test_reduce_rejects_normal_class_without_nodes():
    with pytest.raises(MalformedClass):
        reduce(N * S)


def test_reduce_is_independent_of_rule_order():
    rng = random.Random(7)
    expr = (S + P + PI) ** 3 * (1 + D)
    for _ in range(20):
        assert reduce(expr, rng=rng) == reduce(expr)


def test_xclass_parts():
    cls = reduce(P * PI + S**2 + N * D)
    assert cls.p1 == P
    assert cls.p2 == S**2
    assert cls.p3 == N


def test_relative_chern_class_agrees_up_to_order_six():
    for order in range(1, 7):
        assert verify_relative_chern(order)
    assert total_chern_f(1).value == 1 + S


def test_relative_chern_needs_sigma_pi_relation():
    assert not verify_relative_chern(2, ['pi_square', 'pi_delta', 'sigma_delta'])


def test_p_push_rules():
    assert p_push(S**2) == xi(1)
    assert p_push(PI) == n
    assert p_push(N * D**2) == delta(1, 1)
    assert p_push(P * S) == psi() * xi(0)
    assert p_push(P**3) == 0


def test_p_push_substitutes_xi0_for_given_genus():
    assert p_push(S, g=0) == 2 * n - 2
    assert p_push(S, n=5, g=1) == 10


def test_q_push_product():
    assert q_push_product(YProduct((S, S))) == psi() * xi(0) ** 2
    assert q_push_product(YProduct((S,), psi_exp=2)) == psi() ** 2 * xi(0)
    assert q_push_product(YProduct((), pi_exp=1)) == 1
    assert q_push_product(YProduct((S,), pi_exp=1)) == 0


def test_q_push_product_needs_pole_free_factors():
    with pytest.raises(PoleObstruction):
        q_push_product(YProduct((P,)))


def test_hodge_character():
    assert hodge_ch(0) == g - 1
    assert hodge_ch(2) == 0
    assert hodge_ch(4) == 0
    assert hodge_ch(1) == (xi(1) - 2 * psi() * (2 * n - 2 + 2 * g) + delta(0, 0)) / 12


def test_genus0_identities():
    identities = genus0_identities()
    assert identities[0] == xi(1) - 4 * (n - 1) * psi() + delta(0, 0)
    assert genus0_reduce(identities[0]) == 0


def test_genus0_reduce_eliminates_low_xi():
    assert genus0_reduce(xi(0) + g) == 2 * n - 2
    assert genus0_reduce(xi(1), 4) == 12 * psi() - delta(0, 0)


def test_parse_x_expression():
    assert parse_x_expression('(Σ-Ψ-2Π)^2 + Δ') == (S - P - 2 * PI) ** 2 + D
    assert parse_x_expression('Sigma*Psi') == S * P
    assert parse_x_expression('2Π') == 2 * PI
    with pytest.raises(ValueError):
        parse_x_expression('Σ + z')


def test_relative_chern_degree():
    assert relative_chern_degree(3, 0) == 4
    assert relative_chern_degree(2, 1) == 4
