"""Module for exact sparse polynomials and exact linear solving."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

from hurwitz_strata.errors import NotHomogeneous, ZeroPolynomial
from hurwitz_strata.logger import get_logger

# Setup logger
logger = get_logger(__name__)

# A monomial is a tuple of (variable, exponent) pairs sorted by variable name
Monomial = Tuple[Tuple[str, int], ...]
WeightTable = Mapping[str, int]

ONE: Monomial = ()


def to_fraction(value) -> Fraction:
    """Convert an int, Fraction or sympy rational to a Fraction.

    Args:
        value: Number to convert

    Returns:
        Exact Fraction

    Raises:
        TypeError: If the value is not an exact rational
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, sympy.Basic):
        rational = sympy.Rational(value)
        return Fraction(int(rational.p), int(rational.q))
    raise TypeError(f'Not an exact rational: {value!r}')


def format_rational(value: Fraction) -> str:
    """Render a rational as 'p' or 'p/q'."""
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def parse_rational(text: str) -> Fraction:
    """Parse the 'p' or 'p/q' rendering back into a Fraction."""
    return Fraction(text)


def make_monomial(powers: Mapping[str, int]) -> Monomial:
    """Build a canonical monomial from a variable to exponent map."""
    for name, exp in powers.items():
        if exp < 0:
            raise ValueError(f'Negative exponent {exp} for {name}')
    return tuple(sorted((name, exp) for name, exp in powers.items() if exp))


def monomial_product(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    powers = dict(a)
    for name, exp in b:
        powers[name] = powers.get(name, 0) + exp
    return tuple(sorted(powers.items()))


def monomial_weight(mono: Monomial, weights: WeightTable) -> int:
    """Weighted degree of a single monomial.

    Raises:
        KeyError: If a variable has no weight entry
    """
    total = 0
    for name, exp in mono:
        if name not in weights:
            raise KeyError(f'No weight for variable {name}')
        total += weights[name] * exp
    return total


def monomial_text(mono: Monomial) -> str:
    return '*'.join(name if exp == 1 else f'{name}^{exp}' for name, exp in mono)


Scalar = Union[int, Fraction]


class Polynomial:
    """Sparse multivariate polynomial with exact rational coefficients.

    Terms are stored as a map from canonical monomial to nonzero Fraction.
    Instances are treated as immutable.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        for mono, coef in (terms or {}).items():
            key = make_monomial(dict(mono))
            cleaned[key] = cleaned.get(key, Fraction(0)) + to_fraction(coef)
        self._terms = {mono: coef for mono, coef in cleaned.items() if coef}

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, Fraction]) -> 'Polynomial':
        poly = cls.__new__(cls)
        poly._terms = {mono: coef for mono, coef in terms.items() if coef}
        return poly

    @classmethod
    def var(cls, name: str, exp: int = 1) -> 'Polynomial':
        return cls._wrap({make_monomial({name: exp}): Fraction(1)})

    @classmethod
    def const(cls, value: Scalar) -> 'Polynomial':
        return cls._wrap({ONE: to_fraction(value)})

    @classmethod
    def lift(cls, value: Union['Polynomial', Scalar]) -> 'Polynomial':
        if isinstance(value, Polynomial):
            return value
        return cls.const(value)

    # Arithmetic

    def __add__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        other = Polynomial.lift(other)
        terms = dict(self._terms)
        for mono, coef in other._terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coef
        return Polynomial._wrap(terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._wrap({mono: -coef for mono, coef in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        return self + (-Polynomial.lift(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return Polynomial.lift(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            scale = to_fraction(other)
            return Polynomial._wrap({mono: coef * scale for mono, coef in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for mono_a, coef_a in self._terms.items():
            for mono_b, coef_b in other._terms.items():
                mono = monomial_product(mono_a, mono_b)
                terms[mono] = terms.get(mono, Fraction(0)) + coef_a * coef_b
        return Polynomial._wrap(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (1 / to_fraction(other))

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            return NotImplemented
        result = Polynomial.const(1)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            exp >>= 1
            if exp:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # Inspection

    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def variables(self) -> Tuple[str, ...]:
        names = {name for mono in self._terms for name, _ in mono}
        return tuple(sorted(names))

    def degree_in(self, name: str) -> int:
        return max((dict(mono).get(name, 0) for mono in self._terms), default=0)

    def coefficient(self, powers: Mapping[str, int]) -> Fraction:
        return self._terms.get(make_monomial(powers), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE, Fraction(0))

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def sorted_items(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in canonical order: ascending lex on exponent vectors over sorted names."""
        names = self.variables()

        def key(mono: Monomial) -> Tuple[int, ...]:
            powers = dict(mono)
            return tuple(powers.get(name, 0) for name in names)

        return [(mono, self._terms[mono]) for mono in sorted(self._terms, key=key)]

    # Transformations

    def map_terms(self, fn: Callable[[Monomial, Fraction], 'Polynomial']) -> 'Polynomial':
        """Apply a term-wise linear map and sum the results."""
        total: Dict[Monomial, Fraction] = {}
        for mono, coef in self._terms.items():
            for out_mono, out_coef in fn(mono, coef)._terms.items():
                total[out_mono] = total.get(out_mono, Fraction(0)) + out_coef
        return Polynomial._wrap(total)

    def substitute(self, mapping: Mapping[str, Union['Polynomial', Scalar]]) -> 'Polynomial':
        """Replace variables by polynomials; variables missing from the map are kept."""
        images = {name: Polynomial.lift(value) for name, value in mapping.items()}
        power_cache: Dict[Tuple[str, int], Polynomial] = {}

        def power(name: str, exp: int) -> Polynomial:
            key = (name, exp)
            if key not in power_cache:
                power_cache[key] = images[name] ** exp
            return power_cache[key]

        def image(mono: Monomial, coef: Fraction) -> Polynomial:
            kept = tuple((name, exp) for name, exp in mono if name not in images)
            term = Polynomial._wrap({kept: coef})
            for name, exp in mono:
                if name in images:
                    term = term * power(name, exp)
            return term

        return self.map_terms(image)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Evaluate to a number; every variable must be assigned.

        Raises:
            KeyError: If a variable is left unassigned
        """
        result = self.substitute(values)
        if not result.is_constant():
            raise KeyError(f'Unassigned variables: {", ".join(result.variables())}')
        return result.constant_term()

    def collect(self, names: Iterable[str]) -> Dict[Monomial, 'Polynomial']:
        """Split into monomials in the given variables with polynomial coefficients."""
        selected = set(names)
        groups: Dict[Monomial, Dict[Monomial, Fraction]] = {}
        for mono, coef in self._terms.items():
            key = tuple((name, exp) for name, exp in mono if name in selected)
            rest = tuple((name, exp) for name, exp in mono if name not in selected)
            groups.setdefault(key, {})[rest] = coef
        return {key: Polynomial._wrap(terms) for key, terms in groups.items()}

    def truncate(self, bounds: Mapping[str, int]) -> 'Polynomial':
        """Drop every monomial whose exponent exceeds its bound."""
        return Polynomial._wrap({
            mono: coef
            for mono, coef in self._terms.items()
            if all(exp <= bounds.get(name, exp) for name, exp in mono)
        })

    def truncate_weight(self, max_weight: int, weights: WeightTable) -> 'Polynomial':
        """Drop every monomial of weighted degree above max_weight."""
        return Polynomial._wrap({
            mono: coef
            for mono, coef in self._terms.items()
            if monomial_weight(mono, weights) <= max_weight
        })

    def component(self, weight: int, weights: WeightTable) -> 'Polynomial':
        """Homogeneous component of the given weighted degree."""
        return Polynomial._wrap({
            mono: coef
            for mono, coef in self._terms.items()
            if monomial_weight(mono, weights) == weight
        })

    def divide_by_variable(self, name: str) -> 'Polynomial':
        """Exact division by a single variable.

        Raises:
            ValueError: If some monomial does not contain the variable
        """
        terms: Dict[Monomial, Fraction] = {}
        for mono, coef in self._terms.items():
            powers = dict(mono)
            if not powers.get(name):
                raise ValueError(f'{self} is not divisible by {name}')
            powers[name] -= 1
            terms[make_monomial(powers)] = coef
        return Polynomial._wrap(terms)

    # Rendering

    def to_text(self) -> str:
        """Canonical text: ascending exponent order, '^' for powers, 'p/q' coefficients."""
        if not self._terms:
            return '0'
        pieces = []
        for index, (mono, coef) in enumerate(self.sorted_items()):
            magnitude = abs(coef)
            if not mono:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = monomial_text(mono)
            else:
                body = f'{format_rational(magnitude)}*{monomial_text(mono)}'
            if index == 0:
                pieces.append(f'-{body}' if coef < 0 else body)
            else:
                pieces.append(f' - {body}' if coef < 0 else f' + {body}')
        return ''.join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f'Polynomial({self.to_text()!r})'

    def to_json(self) -> Dict[str, list]:
        return {
            'terms': [
                {'mono': dict(mono), 'coef': format_rational(coef)}
                for mono, coef in self.sorted_items()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping[str, list]) -> 'Polynomial':
        terms: Dict[Monomial, Fraction] = {}
        for entry in data['terms']:
            mono = make_monomial({name: int(exp) for name, exp in entry['mono'].items()})
            terms[mono] = terms.get(mono, Fraction(0)) + parse_rational(entry['coef'])
        return cls._wrap(terms)

    def to_sympy(self) -> sympy.Expr:
        expr = sympy.Integer(0)
        for mono, coef in self._terms.items():
            term = sympy.Rational(coef.numerator, coef.denominator)
            for name, exp in mono:
                term *= sympy.Symbol(name) ** exp
            expr += term
        return expr

    @classmethod
    def from_sympy(cls, expr: sympy.Expr) -> 'Polynomial':
        """Convert a polynomial sympy expression with rational coefficients.

        Raises:
            ValueError: If the expression is not a polynomial
        """
        expr = sympy.expand(sympy.sympify(expr))
        symbols = sorted(expr.free_symbols, key=lambda symbol: symbol.name)
        if not symbols:
            return cls.const(to_fraction(expr))
        try:
            poly = sympy.Poly(expr, *symbols)
        except sympy.PolynomialError as e:
            raise ValueError(f'Not a polynomial: {expr}') from e
        terms: Dict[Monomial, Fraction] = {}
        for exps, coef in poly.terms():
            mono = make_monomial({symbol.name: exp for symbol, exp in zip(symbols, exps)})
            terms[mono] = to_fraction(coef)
        return cls._wrap(terms)


def var(name: str) -> Polynomial:
    return Polynomial.var(name)


def const(value: Scalar) -> Polynomial:
    return Polynomial.const(value)


def falling_factorial(x: Union[Polynomial, Scalar], count: int) -> Union[Polynomial, Fraction]:
    """Pochhammer symbol x(x-1)...(x-count+1)."""
    result = Polynomial.const(1) if isinstance(x, Polynomial) else Fraction(1)
    for offset in range(count):
        result = result * (x - offset)
    return result


def weighted_degree(poly: Polynomial, weights: WeightTable) -> int:
    """Weighted degree of a quasihomogeneous polynomial.

    Args:
        poly: Polynomial to inspect
        weights: Weight of every variable occurring in poly

    Returns:
        The common weighted degree of all terms

    Raises:
        ZeroPolynomial: If poly is zero
        NotHomogeneous: If two terms have different weights
    """
    if not poly:
        raise ZeroPolynomial('The zero polynomial has no weighted degree')
    first_mono = None
    first_weight = None
    for mono, _ in poly.sorted_items():
        weight = monomial_weight(mono, weights)
        if first_weight is None:
            first_mono, first_weight = mono, weight
        elif weight != first_weight:
            raise NotHomogeneous(
                f'Terms {monomial_text(first_mono) or "1"} and {monomial_text(mono) or "1"} '
                f'have weights {first_weight} and {weight}'
            )
    return first_weight


class SolveStatus(Enum):
    UNIQUE = 'unique'
    UNDERDETERMINED = 'underdetermined'
    INCONSISTENT = 'inconsistent'


@dataclass(frozen=True)
class LinearSystem:
    """Rows of the form sum(coefficients[i] * unknowns[i]) == rhs."""

    unknowns: Tuple[str, ...]
    rows: Tuple[Tuple[Tuple[Fraction, ...], Fraction], ...] = ()

    def __post_init__(self):
        for coefficients, _ in self.rows:
            if len(coefficients) != len(self.unknowns):
                raise ValueError(
                    f'Row of length {len(coefficients)} for {len(self.unknowns)} unknowns'
                )

    @classmethod
    def from_linear_forms(
        cls, unknowns: Sequence[str], forms: Iterable[Polynomial]
    ) -> 'LinearSystem':
        """Build the system form == 0 for linear polynomials in the unknowns.

        Raises:
            ValueError: If a form is not affine-linear in the unknowns
        """
        names = tuple(unknowns)
        rows = []
        for form in forms:
            coefficients = [Fraction(0)] * len(names)
            rhs = Fraction(0)
            for mono, coef in form.items():
                if not mono:
                    rhs = -coef
                    continue
                if len(mono) != 1 or mono[0][1] != 1 or mono[0][0] not in names:
                    raise ValueError(f'Form {form} is not linear in {names}')
                coefficients[names.index(mono[0][0])] = coef
            rows.append((tuple(coefficients), rhs))
        return cls(names, tuple(rows))


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    solution: Dict[str, Fraction] = field(default_factory=dict)


def solve_linear(system: LinearSystem) -> SolveResult:
    """Solve a linear system exactly by reduced row echelon form.

    Args:
        system: Linear system over the rationals

    Returns:
        SolveResult with the unique solution, or the UNDERDETERMINED/INCONSISTENT status
    """
    size = len(system.unknowns)
    if not system.rows:
        status = SolveStatus.UNDERDETERMINED if size else SolveStatus.UNIQUE
        return SolveResult(status)

    matrix = sympy.Matrix([
        [sympy.Rational(c.numerator, c.denominator) for c in coefficients]
        + [sympy.Rational(rhs.numerator, rhs.denominator)]
        for coefficients, rhs in system.rows
    ])
    reduced, pivots = matrix.rref()
    logger.debug(f'Solved {len(system.rows)}x{size} system, pivots {pivots}')

    if size in pivots:
        return SolveResult(SolveStatus.INCONSISTENT)
    if len(pivots) < size:
        return SolveResult(SolveStatus.UNDERDETERMINED)
    solution = {name: to_fraction(reduced[row, size]) for row, name in enumerate(system.unknowns)}
    return SolveResult(SolveStatus.UNIQUE, solution)
