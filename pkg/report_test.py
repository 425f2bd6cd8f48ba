"""Tests for check reports and output rendering."""

import json
from fractions import Fraction

import pytest

from hurwitz_strata.algebra import var
from hurwitz_strata.partitions import MultiPartition
from hurwitz_strata.report import (
    Report,
    ReportItem,
    Status,
    class_latex,
    emit,
    render_value,
    to_jsonable,
)
from hurwitz_strata.strata import sigma_g0


def test_empty_report_passes():
    assert Report().to_text() == 'PASS (0 items)'
    assert Report().overall is Status.PASS


def test_compare_statuses():
    report = Report()
    report.add(ReportItem.compare('same', Fraction(1, 2), Fraction(2, 4)))
    report.add(ReportItem.compare('different', 1, 2))
    assert report.overall is Status.FAIL
    assert [item.name for item in report.failures] == ['different']
    text = report.to_text()
    assert text.startswith('FAIL (2 items)')
    assert 'expected: 1' in text
    assert 'computed: 2' in text


def test_failure_item_records_error():
    item = ReportItem.failure('broken', 3, KeyError('x'))
    assert item.status is Status.FAIL
    assert item.computed.startswith('KeyError')


def test_render_value():
    assert render_value(Fraction(-3, 6)) == '-1/2'
    assert render_value(4) == '4'
    assert render_value(True) == 'true'
    assert render_value([1, Fraction(1, 3)]) == '[1, 1/3]'
    assert render_value(2 * var('Σ')) == '2*Σ'


def test_class_latex_factors_coefficients():
    cls = sigma_g0(MultiPartition.parse('2^1'))
    assert class_latex(cls) == '6(n-1)\\psi-3\\delta_{0,0}'
    assert class_latex(var('Σ') * 0) == '0'


def test_emit_json():
    payload = json.loads(emit({'degree': Fraction(5, 2)}, 'json').decode('utf-8'))
    assert payload == {'degree': '5/2'}
    report = Report([ReportItem.compare('one', 1, 1)])
    assert to_jsonable(report)['overall'] == 'PASS'


def test_emit_text_and_latex():
    assert emit(Fraction(1, 3)) == b'1/3\n'
    assert emit(Fraction(1, 3), 'latex') == b'\\frac{1}{3}\n'
    assert emit(['a', 'b']) == b'a\n\nb\n'


def test_emit_rejects_unknown_format():
    with pytest.raises(ValueError):
        emit(1, 'yaml')


def test_polynomial_json_follows_the_terms_schema():
    x = var('x')
    payload = to_jsonable({'class': 2 * x**2 - Fraction(1, 3)})
    assert payload == {
        'class': {
            'terms': [{'mono': {}, 'coef': '-1/3'}, {'mono': {'x': 2}, 'coef': '2'}],
        }
    }
