"""Tests for local models, Thom polynomials and residual polynomials."""

from fractions import Fraction

import pytest

from hurwitz_strata.algebra import Polynomial, falling_factorial, var
from hurwitz_strata.cache import ResidualCache
from hurwitz_strata.errors import InconsistentSystem, UnderDeterminedSystem
from hurwitz_strata.golden import PRINTED_Q, PRINTED_RESIDUALS
from hurwitz_strata.local_models import (
    DELTA,
    PSI,
    SIGMA,
    T,
    LocalModel,
    a_substitution,
    delta_part_monomials,
    exp_coefficient,
    gen_series_coefficient,
    i_models,
    residual_multising,
    solve_delta_part,
    solve_Q,
    thom_Ai,
    unknown_counts,
    wps_degree,
)
from hurwitz_strata.partitions import ReducedPartition

S, P, D = var(SIGMA), var(PSI), var(DELTA)


def test_wps_degree():
    assert wps_degree([1, 2, 3]) == Fraction(1, 6)
    assert wps_degree([4]) == Fraction(1, 4)
    with pytest.raises(ValueError):
        wps_degree([])
    with pytest.raises(ValueError):
        wps_degree([1, 0])


def test_local_model_shapes():
    a3 = LocalModel.a(3)
    assert a3.weights == [1, 2, 3]
    assert a3.degree_f == 4
    assert a3.dim == 2
    assert LocalModel.i(2, 1).degree_f == 3
    with pytest.raises(ValueError):
        LocalModel.i(1, 2)
    with pytest.raises(ValueError):
        LocalModel('B', 1)


def test_i_models_are_ordered():
    models = [str(model) for model in i_models(4)]
    assert models == ['I_1,1', 'I_2,1', 'I_2,2', 'I_3,1']


def test_thom_polynomials():
    assert thom_Ai(1) == S
    assert thom_Ai(2) == 2 * S**2 - S * P
    with pytest.raises(ValueError):
        thom_Ai(0)


@pytest.mark.parametrize('k', [1, 2, 5, 12])
def test_thom_polynomials_restrict_to_falling_factorials(k):
    for i in range(1, 9):
        restricted = thom_Ai(i).substitute(a_substitution(k))
        assert restricted == falling_factorial(k, i) * var(T) ** i


def test_gen_series_coefficient():
    assert gen_series_coefficient(ReducedPartition.parse('1^1'), 2) == 6
    assert gen_series_coefficient(ReducedPartition.parse('1^2'), 3) == 24


def test_delta_part_monomials_count_matches_models():
    for i in range(2, 9):
        counts = unknown_counts(i)
        assert counts['monomials'] == counts['models'] == i * i // 4
    assert delta_part_monomials(-1) == []


@pytest.mark.parametrize('i', sorted(PRINTED_Q))
def test_solve_Q_reproduces_table(i):
    assert solve_Q(i) == PRINTED_Q[i]


def test_exp_coefficient_of_two_equal_parts():
    alpha = ReducedPartition.parse('1^2')
    one, two = ReducedPartition.parse('1^1'), ReducedPartition.parse('1^2')
    values = {one: var('a'), two: var('b')}
    assert exp_coefficient(alpha, values) == var('a') ** 2 + var('b')


@pytest.mark.parametrize('text', sorted(PRINTED_RESIDUALS))
def test_residual_multising_reproduces_table(text):
    alpha = ReducedPartition.parse(text)
    residual = residual_multising(alpha, ResidualCache())
    assert residual.value == PRINTED_RESIDUALS[text]
    assert residual.weight == alpha.weight


def test_residual_of_simple_point_is_sigma():
    assert residual_multising(ReducedPartition.parse('1^1'), ResidualCache()).value == S


def test_residual_text():
    residual = residual_multising(ReducedPartition.parse('1^2'), ResidualCache())
    assert str(residual) == '2*Σ*Ψ - 6*Σ^2 + 2*Δ'


def test_solve_delta_part_reports_bad_constraints():
    with pytest.raises(InconsistentSystem):
        solve_delta_part(S**2, 2, lambda candidate, model: Polynomial.const(1), 'broken')
    with pytest.raises(UnderDeterminedSystem):
        solve_delta_part(S**2, 2, lambda candidate, model: Polynomial(), 'empty')


def restricted_residual(i: int, model: LocalModel) -> Polynomial:
    residual = thom_Ai(i) + solve_Q(i) * var(DELTA)
    return residual.substitute(model.substitution())


@pytest.mark.parametrize('i', range(2, 7))
def test_residual_survives_beyond_the_vanishing_models(i):
    for model in i_models(i):
        assert not restricted_residual(i, model)
    beyond = [model for model in i_models(i + 2) if model.k + model.l > i]
    assert any(restricted_residual(i, model) for model in beyond)


def test_low_residuals_on_the_first_surviving_models():
    t = var(T)
    assert restricted_residual(2, LocalModel.i(2, 1)) == 2 * t**2
    assert restricted_residual(3, LocalModel.i(2, 2)) == 16 * t**3
