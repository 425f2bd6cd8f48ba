"""Tests for the command-line interface."""

import json

import pytest

from main import COMMANDS, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, parse_n_range


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_n_range():
    assert parse_n_range('5') == [5]
    assert parse_n_range('4..6') == [4, 5, 6]


def test_hurwitz_number(capsys):
    code, out, _ = run(capsys, 'hurwitz', '--label', '2^1', '--n', '3')
    assert code == EXIT_OK
    assert out == '1\n'


def test_hurwitz_range(capsys):
    code, out, _ = run(capsys, 'hurwitz', '--label', '2^1', '--n', '3..4')
    assert code == EXIT_OK
    assert out == '3: 1\n4: 27\n'


def test_residual_text(capsys):
    code, out, _ = run(capsys, 'residual', '--label', '1^2')
    assert code == EXIT_OK
    assert out == '2*Σ*Ψ - 6*Σ^2 + 2*Δ\n'


def test_residual_pair_json(capsys):
    code, out, _ = run(capsys, 'residual', '--pair', '2^1;1^2', '--format', 'json')
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['label'] == '2^1;1^2'
    assert len(payload['collisions']) == 1


def test_degrees_json(capsys):
    code, out, _ = run(capsys, 'degrees', '--all', '--n', '5', '--format', 'json')
    assert code == EXIT_OK
    assert json.loads(out)['deg1'] == '25'


def test_strata_rows_json(capsys):
    code, out, _ = run(capsys, 'strata', '--label', '2^1', '--n', '4', '--format', 'json')
    assert code == EXIT_OK
    row = json.loads(out)
    assert set(row) == {'label', 'class', 'degree', 'hurwitz'}
    assert row['hurwitz'] == '27'


def test_strata_latex(capsys):
    code, out, _ = run(capsys, 'strata', '--label', '2^1', '--genus0', '--format', 'latex')
    assert code == EXIT_OK
    assert out == '6(n-1)\\psi-3\\delta_{0,0}\n'


def test_oracle(capsys):
    code, out, _ = run(capsys, 'oracle', '--label', '1^2', '--n', '4')
    assert code == EXIT_OK
    assert out == '12\n'


def test_oracle_resource_bound(capsys):
    code, _, err = run(capsys, 'oracle', '--label', '2^1', '--n', '9')
    assert code == EXIT_USAGE
    assert err.startswith('error:')


def test_verify_single_check(capsys):
    code, out, _ = run(capsys, 'verify', '--check', 'cayley')
    assert code == EXIT_OK
    assert out.startswith('PASS')


def test_verify_saves_report(capsys, tmp_path):
    code, _, _ = run(capsys, 'verify', '--check', 'cayley', '--output-dir', str(tmp_path))
    assert code == EXIT_OK
    assert (tmp_path / 'verify_report.csv').exists()


@pytest.mark.parametrize(
    'argv',
    [
        ['hurwitz', '--label', 'x^y', '--n', '4'],
        ['degrees', '--all', '--n', '8..4'],
        ['residual'],
        ['degrees', '--n', '5'],
        ['verify', '--check', 'no-such-check'],
        ['hurwitz', '--label', '7^1', '--closed-form'],
        ['ring', '--reduce', 'foo + Σ'],
        ['strata', '--label', '2^1;', '--n', '4'],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert out == ''


def test_computation_errors_are_not_usage_errors(capsys, monkeypatch):
    def undefined_factorial(args):
        raise ValueError('(2n-8)! is undefined at n=3')

    monkeypatch.setitem(COMMANDS, 'hurwitz', undefined_factorial)
    code, out, err = run(capsys, 'hurwitz', '--label', '2^1', '--n', '3')
    assert code == EXIT_FAIL
    assert out == ''
    assert 'undefined' in err
