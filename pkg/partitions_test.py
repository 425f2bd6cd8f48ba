"""Tests for reduced partitions, multipartitions and the s-variable algebra."""

from fractions import Fraction

import pytest

from hurwitz_strata.errors import NegativeSimplePoints, PartitionSyntaxError
from hurwitz_strata.partitions import (
    MultiPartition,
    ReducedPartition,
    SSum,
    aut_order,
    aut_set_order,
    m_count,
    s_exp,
    s_multiply,
)


def label(text: str) -> MultiPartition:
    return MultiPartition.parse(text)


def test_parse_and_render_reduced_partition():
    alpha = ReducedPartition.parse('2^1,1^2')
    assert alpha.parts == (2, 1, 1)
    assert str(alpha) == '1^2,2^1'
    assert ReducedPartition.parse('1^2 2^1') == alpha
    assert alpha.weight == 4
    assert alpha.codim == 3


@pytest.mark.parametrize('text', ['0^1', '2^0', 'a', '1^'])
def test_parse_rejects_bad_factors(text):
    with pytest.raises(PartitionSyntaxError):
        ReducedPartition.parse(text)


def test_multipartition_is_stored_canonically():
    assert label('1^2;2^1') == label('2^1;1^2')
    assert str(label('1^2;2^1')) == '2^1;1^2'
    assert label('2^1;1^2').codim == 2
    assert len(label('')) == 0


def test_nondegenerate_member_is_not_a_stratum():
    with pytest.raises(PartitionSyntaxError):
        label('1^1;2^1').validate_stratum()


def test_automorphism_orders():
    assert aut_order(ReducedPartition.parse('1^2,2^1')) == 2
    assert aut_order(ReducedPartition.parse('1^4')) == 24
    assert aut_set_order(label('2^1;2^1')) == 2
    assert aut_set_order(label('2^1;1^2')) == 1


def test_submultisets_by_weight():
    subs = ReducedPartition.parse('1^1,2^1').submultisets()
    assert [str(sub) for sub in subs] == ['1^1', '2^1', '1^1,2^1']


def test_m_count():
    assert m_count(label('2^1'), 3, 0) == 2
    assert m_count(label('1^2;1^2'), 4, 0) == 2
    assert m_count(label('2^1'), 3, 1) == 4
    with pytest.raises(NegativeSimplePoints):
        m_count(label('1^3'), 2, 0)


def test_s_multiply_merges_members():
    one = SSum.variable(label('1^1'))
    product = s_multiply(one, one)
    assert product.terms() == {
        label('1^1;1^1'): 1,
        label('1^2'): 1,
    }


def test_s_exp_truncates_by_weight():
    one = SSum.variable(label('1^1'))
    result = s_exp(one, 2)
    assert result.coefficient(label('')) == 1
    assert result.coefficient(label('1^1')) == 1
    assert result.coefficient(label('1^2')) == Fraction(1, 2)
    assert result.coefficient(label('1^1;1^1')) == Fraction(1, 2)
    assert result.coefficient(label('1^3')) == 0


@pytest.mark.parametrize('text', ['2^1;', ';1^2', '2^1;;1^2'])
def test_parse_rejects_empty_critical_values(text):
    with pytest.raises(PartitionSyntaxError):
        label(text)


def test_product_of_two_pairs_has_seven_terms():
    first = SSum.variable(label('1^1;2^1'))
    second = SSum.variable(label('3^1;4^1'))
    expected = [
        '1^1;2^1;3^1;4^1',
        '1^1,3^1;2^1;4^1',
        '1^1;2^1,3^1;4^1',
        '1^1,4^1;2^1;3^1',
        '1^1;2^1,4^1;3^1',
        '1^1,3^1;2^1,4^1',
        '1^1,4^1;2^1,3^1',
    ]
    assert s_multiply(first, second).terms() == {label(text): 1 for text in expected}


SAMPLE_SUMS = [
    SSum({label('1^1'): 1, label('2^1'): 2}),
    SSum({label('1^1;1^1'): 1, label('1^2'): -1}),
    SSum({label('2^1'): 3, label('1^1;2^1'): Fraction(1, 2)}),
]


@pytest.mark.parametrize('first', SAMPLE_SUMS)
@pytest.mark.parametrize('second', SAMPLE_SUMS)
def test_s_multiply_is_commutative(first, second):
    assert s_multiply(first, second) == s_multiply(second, first)


def test_s_multiply_is_associative():
    a, b, c = SAMPLE_SUMS
    assert s_multiply(s_multiply(a, b), c) == s_multiply(a, s_multiply(b, c))


@pytest.mark.parametrize('left, right', [('2^1', '1^2'), ('1^2;2^1', '3^1'), ('', '1^3')])
def test_codim_is_additive(left, right):
    assert (label(left) + label(right)).codim == label(left).codim + label(right).codim
