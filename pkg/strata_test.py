"""Tests for stratum classes assembled from residual polynomials."""

from fractions import Fraction

import pytest

from hurwitz_strata.algebra import var
from hurwitz_strata.errors import ConventionMismatch, UnknownLabel
from hurwitz_strata.golden import (
    GENERAL_STRATA,
    GENUS0_STRATA,
    PRINTED_PAIR_RESIDUALS,
    STRATA_LABELS,
)
from hurwitz_strata.local_models import T, LocalModel
from hurwitz_strata.partitions import MultiPartition, ReducedPartition
from hurwitz_strata.ring import N_SYMBOL, delta, genus0_reduce, psi, xi
from hurwitz_strata.strata import (
    assemble,
    assemble_single,
    collision_table,
    collision_terms,
    degenerate_parts,
    local_class,
    pair_models,
    residual_multimulti,
    residual_norm,
    sigma_g0,
    stored_stratum,
)

n = var(N_SYMBOL)


def label(text: str) -> MultiPartition:
    return MultiPartition.parse(text)


@pytest.mark.parametrize('text', STRATA_LABELS)
def test_assembled_classes_match_stored_lines(text):
    expression = assemble(label(text), compare=True)
    assert expression.general_g == GENERAL_STRATA[text]
    assert expression.genus0 == GENUS0_STRATA[text]


@pytest.mark.parametrize('text', STRATA_LABELS)
def test_genus0_reduction_of_stored_lines(text):
    assert genus0_reduce(GENERAL_STRATA[text]) == GENUS0_STRATA[text]


def test_caustic_class_in_genus_zero():
    assert sigma_g0(label('2^1')) == 6 * (n - 1) * psi() - 3 * delta(0, 0)


def test_empty_label_is_the_whole_space():
    assert assemble(label('')).general_g == 1


def test_single_label_assembly_starts_from_residual():
    assert assemble_single(ReducedPartition.parse('2^1')) == GENERAL_STRATA['2^1']


@pytest.mark.parametrize('text', sorted(PRINTED_PAIR_RESIDUALS))
def test_pair_residuals_are_unique_solutions(text):
    assert residual_multimulti(label(text)).value == PRINTED_PAIR_RESIDUALS[text]


def test_collision_terms():
    table = collision_table([label('2^1;2^1'), label('2^1;1^2'), label('1^2;1^2')])
    assert table['2^1;2^1'] == ()
    (term,) = table['2^1;1^2']
    assert term.slots == ('Σ', 'R[2^1]')
    assert term.coefficient == -2
    found = {(term.slots, term.psi_exp): term.coefficient for term in table['1^2;1^2']}
    assert found == {
        (('Σ', 'Σ', 'Σ'), 0): Fraction(-1, 2),
        (('Σ', 'R[1^2]'), 0): -1,
        (('Σ', 'Σ'), 1): Fraction(1, 4),
    }


def test_residual_norms():
    assert residual_norm(label('2^1;2^1')) == 2
    assert residual_norm(label('2^1;1^2')) == 2
    assert residual_norm(label('1^2;1^2')) == 8


def test_degenerate_parts():
    assert [str(part) for part in degenerate_parts(label('2^1;1^2'))] == ['1^2', '2^1']


def test_unknown_pair_label():
    with pytest.raises(UnknownLabel):
        residual_multimulti(label('3^1;2^1'))
    with pytest.raises(ValueError):
        residual_multimulti(label('1^2'))


def test_stored_stratum_lookup():
    assert stored_stratum(label('1^2'), genus0=True) == GENUS0_STRATA['1^2']
    with pytest.raises(UnknownLabel):
        stored_stratum(label('5^1'))


PAIR_LABELS = sorted(PRINTED_PAIR_RESIDUALS)


@pytest.mark.parametrize('text', PAIR_LABELS)
def test_pair_classes_vanish_where_the_stratum_is_empty(text):
    pair = label(text)
    residual = residual_multimulti(pair)
    for model in pair_models(pair):
        assert local_class(pair, residual.value, residual.collisions, model) == 0, str(model)


def test_pair_class_on_a_model_containing_the_stratum():
    pair = label('2^1;2^1')
    residual = residual_multimulti(pair)
    found = local_class(pair, residual.value, residual.collisions, LocalModel.a(4))
    assert found == 12 * var(T) ** 2


def test_pair_models_match_the_unknown_count():
    assert [str(model) for model in pair_models(label('2^1;1^2'))] == [
        'A_1', 'A_2', 'A_3', 'I_1,1', 'I_2,1'
    ]


def test_collision_terms_need_two_critical_values():
    with pytest.raises(ValueError):
        collision_terms(label('1^2'))


def test_altered_stored_class_is_reported(monkeypatch):
    altered = GENERAL_STRATA['2^1;1^2'] + 7 * psi() * xi(1)
    monkeypatch.setitem(GENERAL_STRATA, '2^1;1^2', altered)
    with pytest.raises(ConventionMismatch):
        assemble(label('2^1;1^2'), compare=True)
