"""Tests for exact polynomials and the linear solver."""

import random
from fractions import Fraction

import pytest

from hurwitz_strata.algebra import (
    LinearSystem,
    Polynomial,
    SolveStatus,
    falling_factorial,
    format_rational,
    solve_linear,
    var,
    weighted_degree,
)
from hurwitz_strata.errors import NotHomogeneous, ZeroPolynomial

x, y = var('x'), var('y')


def test_canonical_text_orders_terms_by_exponent_vector():
    assert ((x + y) * (x + y)).to_text() == 'y^2 + 2*x*y + x^2'
    assert ((x - y) * (x + y)).to_text() == '-y^2 + x^2'
    assert Polynomial().to_text() == '0'
    assert (x / 3 - Fraction(1, 2)).to_text() == '-1/2 + 1/3*x'


def test_arithmetic_cancels_to_zero():
    assert not (x * y - y * x)
    assert (x + 1) - 1 == x
    assert 2 - x == -(x - 2)
    assert (x + y) ** 0 == 1


def test_substitute_keeps_unmapped_variables():
    assert (x**2).substitute({'x': y + 1}).to_text() == '1 + 2*y + y^2'
    assert (x * y).substitute({'x': 2}) == 2 * y


def test_evaluate_requires_every_variable():
    assert (x**2 + y).evaluate({'x': 3, 'y': Fraction(1, 2)}) == Fraction(19, 2)
    with pytest.raises(KeyError):
        (x + y).evaluate({'x': 1})


def test_collect_groups_coefficients():
    poly = 3 * x * y + 2 * x + y
    groups = poly.collect(['x'])
    assert groups[(('x', 1),)] == 3 * y + 2
    assert groups[()] == y


def test_weighted_degree():
    sigma, nodes = var('Σ'), var('Δ')
    weights = {'Σ': 1, 'Δ': 2}
    assert weighted_degree(sigma**2 - 3 * nodes, weights) == 2
    with pytest.raises(NotHomogeneous):
        weighted_degree(sigma + nodes, weights)
    with pytest.raises(ZeroPolynomial):
        weighted_degree(Polynomial(), weights)


def test_falling_factorial_symbolic_and_numeric():
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(x, 2) == x**2 - x
    assert falling_factorial(x, 0) == 1


def test_json_and_sympy_conversions_agree():
    poly = Fraction(-3, 4) * x**2 * y + 5
    assert Polynomial.from_json(poly.to_json()) == poly
    assert Polynomial.from_sympy(poly.to_sympy()) == poly


def test_format_rational():
    assert format_rational(Fraction(6, 4)) == '3/2'
    assert format_rational(Fraction(-8, 2)) == '-4'


def test_solve_linear_unique():
    system = LinearSystem.from_linear_forms(['x', 'y'], [x + y - 3, x - y - 1])
    result = solve_linear(system)
    assert result.status is SolveStatus.UNIQUE
    assert result.solution == {'x': Fraction(2), 'y': Fraction(1)}


def test_solve_linear_underdetermined_and_inconsistent():
    under = LinearSystem.from_linear_forms(['x', 'y'], [x + y - 3])
    assert solve_linear(under).status is SolveStatus.UNDERDETERMINED
    inconsistent = LinearSystem.from_linear_forms(['x'], [x - 1, x - 2])
    assert solve_linear(inconsistent).status is SolveStatus.INCONSISTENT


def test_linear_forms_reject_nonlinear_terms():
    with pytest.raises(ValueError):
        LinearSystem.from_linear_forms(['x'], [x**2 - 1])


def random_polynomial(rng: random.Random, names=('x', 'y', 'z'), terms: int = 4) -> Polynomial:
    poly = Polynomial()
    for _ in range(terms):
        mono = Polynomial.const(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
        for name in names:
            mono = mono * var(name) ** rng.randint(0, 2)
        poly = poly + mono
    return poly


@pytest.mark.parametrize('seed', range(5))
def test_ring_axioms_on_random_polynomials(seed):
    rng = random.Random(seed)
    a, b, c = (random_polynomial(rng) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial()
    assert a * 1 == a


@pytest.mark.parametrize('seed', range(5))
def test_substitute_is_a_ring_homomorphism(seed):
    rng = random.Random(seed)
    a, b = random_polynomial(rng), random_polynomial(rng)
    mapping = {'x': random_polynomial(rng, ('y', 'w'), 2), 'z': Fraction(rng.randint(-3, 3))}
    assert (a + b).substitute(mapping) == a.substitute(mapping) + b.substitute(mapping)
    assert (a * b).substitute(mapping) == a.substitute(mapping) * b.substitute(mapping)


def test_unique_solution_leaves_zero_residual():
    z = var('z')
    forms = [2 * x - y + z - 1, x + 3 * y - 2 * z - Fraction(1, 2), -x + y + 4 * z - 7]
    result = solve_linear(LinearSystem.from_linear_forms(['x', 'y', 'z'], forms))
    assert result.status is SolveStatus.UNIQUE
    for form in forms:
        assert form.evaluate(result.solution) == 0
