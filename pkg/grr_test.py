"""Tests for Chern characters, Todd classes and the relative GRR expansion."""

from fractions import Fraction

import pytest

from hurwitz_strata.algebra import Polynomial, var
from hurwitz_strata.grr import (
    OMEGA,
    ChernVector,
    GradedSeries,
    ch_from_chern,
    codim2_top_class,
    exterior_alternating_ch,
    grr_rhs,
    koszul_ch,
    koszul_factor,
    node_character,
    td_inverse_series,
    td_from_ch,
    td_series,
    todd_coefficients,
)

c1, c2 = var('c1'), var('c2')


def test_todd_coefficients():
    assert todd_coefficients(4) == (
        Fraction(1), Fraction(1, 2), Fraction(1, 12), Fraction(0), Fraction(-1, 720)
    )


def test_chern_character_of_rank_two_bundle():
    ch = ch_from_chern(ChernVector.symbolic(2), 3)
    assert ch.component(0) == 2
    assert ch.component(1) == c1
    assert ch.component(2) == (c1**2 - 2 * c2) / 2
    assert ch.component(3) == (c1**3 - 3 * c1 * c2) / 6


def test_todd_class_low_degrees():
    td = td_series(ChernVector.symbolic(2), 3)
    assert td.component(1) == c1 / 2
    assert td.component(2) == (c1**2 + c2) / 12
    assert td.component(3) == c1 * c2 / 24


def test_todd_times_inverse_is_one():
    cv = ChernVector.symbolic(3)
    product = td_series(cv, 4) * td_inverse_series(cv, 4)
    assert product == GradedSeries.constant(1, 4)


def test_whitney_sum_multiplies_total_chern_classes():
    line_a = ChernVector((var('a'),), 1)
    line_b = ChernVector((var('b'),), 1)
    total = line_a + line_b
    assert total.chern(1) == var('a') + var('b')
    assert total.chern(2) == var('a') * var('b')
    assert total.rank == 2


def test_koszul_resolvent_of_divisor():
    sigma = var('Σ')
    top = GradedSeries([Polynomial(), sigma, Polynomial(), Polynomial(), Polynomial()])
    assert koszul_ch(1, 4) == top * koszul_factor(1, 4)


def test_koszul_resolvent_of_codim_two_locus():
    top = GradedSeries([Polynomial(), Polynomial(), var('N2')] + [Polynomial()] * 3)
    assert koszul_ch(2, 5) == top * koszul_factor(2, 5)
    assert koszul_factor(2, 2).component(2) == (2 * var('N1') ** 2 - var('N2')) / 12


def test_koszul_rejects_higher_codimension():
    with pytest.raises(ValueError):
        koszul_ch(3, 2)


def test_exterior_alternating_matches_koszul():
    cv = ChernVector((var('N1'), var('N2')), 2)
    assert exterior_alternating_ch(cv, 4) == koszul_ch(2, 4)


def test_grr_expansion_levels():
    terms = {term.level: term for term in grr_rhs(6)}
    omega, nodes, normal = var(OMEGA), var('Δ'), var('N')
    assert sorted(terms) == [1, 2, 4, 6]
    assert terms[1].coefficient == Fraction(1, 2)
    assert terms[1].cls == omega
    assert terms[2].coefficient == Fraction(1, 12)
    assert terms[2].cls == omega**2 + nodes
    assert terms[4].coefficient == Fraction(-1, 720)
    assert terms[4].cls == omega**4 + (normal**2 - 3 * nodes) * nodes
    assert terms[6].coefficient == Fraction(1, 30240)


def test_graded_series_exp_needs_zero_constant():
    with pytest.raises(ValueError):
        GradedSeries.constant(1, 2).exp()


def test_chern_character_is_additive_under_whitney_sum():
    first = ChernVector((var('a1'), var('a2')), 2)
    second = ChernVector((var('b1'),), 1)
    assert ch_from_chern(first + second, 4) == ch_from_chern(first, 4) + ch_from_chern(second, 4)


def test_todd_class_is_multiplicative_under_whitney_sum():
    first = ChernVector((var('a1'), var('a2')), 2)
    second = ChernVector((var('b1'), var('b2')), 2)
    assert td_series(first + second, 4) == td_series(first, 4) * td_series(second, 4)


def test_todd_class_from_chern_character():
    cv = ChernVector.symbolic(3)
    assert td_from_ch(ch_from_chern(cv, 5)) == td_series(cv, 5)


def test_node_character_matches_the_node_bundle():
    normal, nodes = var('N'), var('Δ')
    classes = [Polynomial()] + [(-normal) ** j * nodes for j in range(5)]
    assert node_character(6) == ch_from_chern(ChernVector(tuple(classes), 0), 6)
    assert node_character(6).component(2) == -nodes
    assert codim2_top_class(3).component(2) == var('N2')
