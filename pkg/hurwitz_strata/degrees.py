"""Module for genus-zero degrees of classes on the Hurwitz space and Hurwitz numbers."""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Sequence, Tuple

from hurwitz_strata.algebra import Polynomial, format_rational, make_monomial, var
from hurwitz_strata.errors import DimensionMismatch, UnknownLabel, UnknownMonomialDegree
from hurwitz_strata.logger import get_logger
from hurwitz_strata.oracle import reduced_to_cycle_type
from hurwitz_strata.partitions import MultiPartition, ReducedPartition, aut_set_order, m_count
from hurwitz_strata.ring import G_SYMBOL, N_SYMBOL, PSI_B, delta_name, genus0_reduce, xi_name
from hurwitz_strata.strata import sigma_g0

# Setup logger
logger = get_logger(__name__)

n = var(N_SYMBOL)


@dataclass(frozen=True)
class ClosedForm:
    """factor(n) * n^(n - shift)."""

    factor: Polynomial
    shift: int

    def __call__(self, value: int) -> Fraction:
        return self.factor.evaluate({N_SYMBOL: value}) * Fraction(value) ** (value - self.shift)

    def __str__(self):
        return f'({self.factor.to_text()})*n^(n-{self.shift})'


@dataclass(frozen=True)
class HurwitzFormula:
    """factor(n) * (2n - a)!/(n - b)! * n^(n - c); zero when n < b."""

    factor: Polynomial
    a: int
    b: int
    c: int

    def __call__(self, value: int) -> Fraction:
        if value < self.b:
            return Fraction(0)
        if 2 * value < self.a:
            raise ValueError(f'(2n-{self.a})! is undefined at n={value}')
        ratio = Fraction(math.factorial(2 * value - self.a), math.factorial(value - self.b))
        power = Fraction(value) ** (value - self.c)
        return self.factor.evaluate({N_SYMBOL: value}) * ratio * power

    def __str__(self):
        return f'({self.factor.to_text()})*(2n-{self.a})!/(n-{self.b})!*n^(n-{self.c})'


# Monomials in δ_{k,l} and ξ_k with tabulated genus-zero degrees
ONE_KEY = make_monomial({})
BASIC_DEGREES: Dict[tuple, ClosedForm] = {
    ONE_KEY: ClosedForm(Polynomial.const(1), 3),
    make_monomial({delta_name(0, 0): 1}): ClosedForm(
        Fraction(1, 2) * (n - 1) * (n + 6), 4
    ),
    make_monomial({xi_name(2): 1}): ClosedForm(
        Fraction(1, 3) * (n - 1) * (17 * n**2 - 28 * n + 12), 5
    ),
    make_monomial({delta_name(1, 0): 1}): ClosedForm(
        Fraction(-1, 6) * (n - 1) * (n**2 + 10 * n - 120), 5
    ),
    make_monomial({delta_name(0, 0): 2}): ClosedForm(
        Fraction(1, 12) * (n - 1) * (3 * n**3 + 31 * n**2 + 82 * n - 120), 5
    ),
}

# Names used for the basic degrees in tables and JSON output
BASIC_DEGREE_NAMES = {
    ONE_KEY: 'deg1',
    make_monomial({delta_name(0, 0): 1}): 'deg_delta00',
    make_monomial({xi_name(2): 1}): 'deg_xi2',
    make_monomial({delta_name(1, 0): 1}): 'deg_delta10',
    make_monomial({delta_name(0, 0): 2}): 'deg_delta00_sq',
}

# Degrees of the genus-zero strata
STRATUM_DEGREES: Dict[str, ClosedForm] = {
    '2^1': ClosedForm(Fraction(9, 2) * (n - 2) * (n - 1), 4),
    '1^2': ClosedForm(2 * (n - 3) * (n - 2) * (n - 1), 4),
    '3^1': ClosedForm(Fraction(32, 3) * (n - 3) * (n - 2) * (n - 1), 5),
    '1^1,2^1': ClosedForm(9 * (n - 4) * (n - 3) * (n - 2) * (n - 1), 5),
    '1^3': ClosedForm(Fraction(4, 3) * (n - 5) * (n - 4) * (n - 3) * (n - 2) * (n - 1), 5),
    '2^1;2^1': ClosedForm(
        Fraction(3, 8) * (n - 2) * (n - 1) * (27 * n**2 - 137 * n + 180), 5
    ),
    '2^1;1^2': ClosedForm(3 * (n - 3) * (n - 2) * (n - 1) * (3 * n**2 - 15 * n + 20), 5),
    '1^2;1^2': ClosedForm(
        (n - 3) * (n - 2) * (n - 1) * (2 * n**3 - 16 * n**2 + 43 * n - 40), 5
    ),
}

# Hurwitz numbers of the genus-zero strata
HURWITZ_FORMULAS: Dict[str, HurwitzFormula] = {
    '2^1': HurwitzFormula(Polynomial.const(Fraction(9, 2)), 4, 3, 5),
    '1^2': HurwitzFormula(Polynomial.const(2), 4, 4, 5),
    '3^1': HurwitzFormula(Polynomial.const(Fraction(32, 3)), 5, 4, 6),
    '1^1,2^1': HurwitzFormula(Polynomial.const(9), 5, 5, 6),
    '1^3': HurwitzFormula(Polynomial.const(Fraction(4, 3)), 5, 6, 6),
    '2^1;2^1': HurwitzFormula(Fraction(3, 4) * (27 * n**2 - 137 * n + 180), 6, 3, 6),
    '2^1;1^2': HurwitzFormula(3 * (3 * n**2 - 15 * n + 20), 6, 4, 6),
    '1^2;1^2': HurwitzFormula(2 * (2 * n**3 - 16 * n**2 + 43 * n - 40), 6, 4, 6),
}

# Degree of the locus of functions with nonisolated singularities
I_INFTY = ClosedForm(Fraction(1, 8) * (n - 1) * (n**3 + 11 * n**2 + 34 * n - 120), 5)

# Multiples of I_∞ separating codim-3 strata from their expected classes
CORRECTIONS: Dict[str, int] = {
    '4^1': 5,
    '1^1,3^1': -16,
    '2^2': -9,
    '1^2,2^1': 36,
    '1^4': -16,
}


def degree(b: Polynomial, value: int) -> Fraction:
    """Genus-zero degree of a class in ψ, ξ_k and δ_{k,l} at n = value.

    Powers of ψ are absorbed by the pairing with 1/(1-ψ).

    Raises:
        UnknownMonomialDegree: If a monomial has no tabulated degree
    """
    reduced = genus0_reduce(b, value).substitute({N_SYMBOL: value, G_SYMBOL: 0})
    total = Fraction(0)
    for mono, coef in reduced.items():
        key = tuple((name, exp) for name, exp in mono if name != PSI_B)
        if key not in BASIC_DEGREES:
            shown = Polynomial({key: 1}).to_text()
            raise UnknownMonomialDegree(f'No tabulated degree for {shown}')
        total += coef * BASIC_DEGREES[key](value)
    return total


def basic_degree_table(value: int) -> Dict[str, Fraction]:
    return {BASIC_DEGREE_NAMES[key]: form(value) for key, form in BASIC_DEGREES.items()}


def degree_closed_form(label: MultiPartition) -> ClosedForm:
    """Tabulated degree of a genus-zero stratum.

    Raises:
        UnknownLabel: If the label is not tabulated
    """
    try:
        return STRATUM_DEGREES[str(label)]
    except KeyError:
        raise UnknownLabel(f'No degree formula for {label}') from None


def exponent_vectors(length: int, total: int) -> Iterator[Tuple[int, ...]]:
    """All vectors of nonnegative integers of the given length and sum."""
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in exponent_vectors(length - 1, total - first):
            yield (first,) + rest


def mzn_psi_integral(a: Sequence[int]) -> Fraction:
    """Integral of ψ_1^a_1 ... ψ_n^a_n over the moduli space of rational n-pointed curves.

    Raises:
        DimensionMismatch: If the exponents do not add up to n-3
    """
    points = len(a)
    if any(exp < 0 for exp in a) or sum(a) != points - 3:
        raise DimensionMismatch(f'Exponents {tuple(a)} do not add up to {points - 3}')
    return Fraction(math.factorial(points - 3), math.prod(math.factorial(exp) for exp in a))


def cayley_sum(value: int) -> Fraction:
    """Sum of all ψ-intersection numbers with n = value points; equals n^(n-3)."""
    return sum(
        (mzn_psi_integral(a) for a in exponent_vectors(value, value - 3)),
        Fraction(0),
    )


def hurwitz_from_degree(label: MultiPartition, value: int, deg: Fraction) -> Fraction:
    """h = |Aut| * m!/n! * deg, m being the number of simple critical values."""
    simple = m_count(label, value, 0)
    return aut_set_order(label) * Fraction(math.factorial(simple), math.factorial(value)) * deg


def degree_from_hurwitz(label: MultiPartition, value: int, h: Fraction) -> Fraction:
    simple = m_count(label, value, 0)
    return h * Fraction(math.factorial(value), aut_set_order(label) * math.factorial(simple))


def hurwitz_number(label: MultiPartition, value: int) -> Fraction:
    """Genus-zero Hurwitz number of a stratum from the degree of its class."""
    result = hurwitz_from_degree(label, value, degree(sigma_g0(label), value))
    logger.debug(f'h[{label}]({value}) = {format_rational(result)}')
    return result


def h_closed_form(label: MultiPartition) -> HurwitzFormula:
    """Tabulated Hurwitz-number formula of a genus-zero stratum.

    Raises:
        UnknownLabel: If the label is not tabulated
    """
    try:
        return HURWITZ_FORMULAS[str(label)]
    except KeyError:
        raise UnknownLabel(f'No Hurwitz formula for {label}') from None


def i_infty(value: int) -> Fraction:
    return I_INFTY(value)


def correction(label: MultiPartition) -> int:
    """Multiple of I_∞ added to the expected class of a codim-3 stratum.

    Raises:
        UnknownLabel: If no correction is tabulated for the label
    """
    try:
        return CORRECTIONS[str(label)]
    except KeyError:
        raise UnknownLabel(f'No nonisolated correction for {label}') from None


def one_point_hurwitz(alpha: ReducedPartition, value: int) -> Fraction:
    """Genus-zero Hurwitz number with one prescribed critical value, all others simple.

    Uses (n+l-2)!/|Aut mu| * n^(l-3) * prod mu_i^mu_i/mu_i! for the cycle type mu with
    l cycles, fixed points included.
    """
    cycle_type = reduced_to_cycle_type(alpha, value)
    length = len(cycle_type)
    aut = math.prod(math.factorial(cycle_type.count(part)) for part in set(cycle_type))
    product = math.prod(
        Fraction(part ** part, math.factorial(part)) for part in cycle_type
    )
    return (
        Fraction(math.factorial(value + length - 2), aut)
        * Fraction(value) ** (length - 3)
        * product
    )


def stratum_degree_from_hurwitz(alpha: ReducedPartition, value: int) -> Fraction:
    label = MultiPartition.single(alpha)
    return degree_from_hurwitz(label, value, one_point_hurwitz(alpha, value))


def expected_degree(label: MultiPartition, value: int) -> Fraction:
    """Degree of the expected class of a codim-3 stratum, deg σ - c * deg I_∞.

    Defined through the stored correction c; there is no independent computation of it.
    """
    coefficient = correction(label)
    alpha = label.parts[0]
    return stratum_degree_from_hurwitz(alpha, value) - coefficient * i_infty(value)
