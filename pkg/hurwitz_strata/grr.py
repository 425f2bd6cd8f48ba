"""Module for Chern characters, Todd classes, Koszul resolvents and the relative GRR expansion."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

import sympy

from hurwitz_strata.algebra import Polynomial, to_fraction, var
from hurwitz_strata.logger import get_logger

# Deepest cohomological degree used by the GRR expansion
MAX_ORDER = 6

# First Chern class of the relative dualizing sheaf
OMEGA = 'ω'

# Setup logger
logger = get_logger(__name__)


@lru_cache(maxsize=None)
def todd_coefficients(order: int) -> Tuple[Fraction, ...]:
    """Taylor coefficients of x/(1-e^-x) at 0."""
    x = sympy.Symbol('x')
    expansion = sympy.series(x / (1 - sympy.exp(-x)), x, 0, order + 1).removeO()
    return tuple(to_fraction(expansion.coeff(x, power)) for power in range(order + 1))


@lru_cache(maxsize=None)
def log_todd_coefficients(order: int) -> Tuple[Fraction, ...]:
    """Taylor coefficients of log(x/(1-e^-x)) at 0, by the formal logarithm."""
    tail = [Fraction(0)] + list(todd_coefficients(order)[1:])
    result = [Fraction(0)] * (order + 1)
    power = [Fraction(1)] + [Fraction(0)] * order
    for count in range(1, order + 1):
        power = [
            sum((power[i] * tail[d - i] for i in range(d + 1)), Fraction(0))
            for d in range(order + 1)
        ]
        sign = Fraction((-1) ** (count + 1), count)
        result = [r + sign * p for r, p in zip(result, power)]
    return tuple(result)


class GradedSeries:
    """Truncated series whose d-th component is homogeneous of degree d."""

    __slots__ = ('components',)

    def __init__(self, components: Sequence[Polynomial]):
        self.components: Tuple[Polynomial, ...] = tuple(Polynomial.lift(c) for c in components)

    @classmethod
    def constant(cls, value, order: int) -> 'GradedSeries':
        return cls([Polynomial.const(value)] + [Polynomial()] * order)

    @property
    def order(self) -> int:
        return len(self.components) - 1

    def component(self, degree: int) -> Polynomial:
        if 0 <= degree < len(self.components):
            return self.components[degree]
        return Polynomial()

    def truncate(self, order: int) -> 'GradedSeries':
        return GradedSeries([self.component(d) for d in range(order + 1)])

    def total(self) -> Polynomial:
        result = Polynomial()
        for component in self.components:
            result = result + component
        return result

    def __add__(self, other: 'GradedSeries') -> 'GradedSeries':
        order = min(self.order, other.order)
        return GradedSeries([self.component(d) + other.component(d) for d in range(order + 1)])

    def __sub__(self, other: 'GradedSeries') -> 'GradedSeries':
        return self + other.scale(-1)

    def scale(self, factor) -> 'GradedSeries':
        return GradedSeries([c * factor for c in self.components])

    def __mul__(self, other: 'GradedSeries') -> 'GradedSeries':
        order = min(self.order, other.order)
        result = []
        for degree in range(order + 1):
            total = Polynomial()
            for i in range(degree + 1):
                total = total + self.component(i) * other.component(degree - i)
            result.append(total)
        return GradedSeries(result)

    def exp(self) -> 'GradedSeries':
        """Exponential of a series without constant term.

        Raises:
            ValueError: If the degree-0 component is nonzero
        """
        if self.component(0):
            raise ValueError('exp needs a series without constant term')
        result = GradedSeries.constant(1, self.order)
        power = GradedSeries.constant(1, self.order)
        for count in range(1, self.order + 1):
            power = (power * self).scale(Fraction(1, count))
            result = result + power
        return result

    def substitute(self, mapping) -> 'GradedSeries':
        return GradedSeries([c.substitute(mapping) for c in self.components])

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        order = max(self.order, other.order)
        return all(self.component(d) == other.component(d) for d in range(order + 1))

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        body = ', '.join(str(c) for c in self.components)
        return f'GradedSeries([{body}])'


@dataclass(frozen=True)
class ChernVector:
    """Chern classes c_1..c_r of a (possibly virtual) bundle of the given rank."""

    c: Tuple[Polynomial, ...]
    rank: int = 0

    @classmethod
    def symbolic(cls, rank: int, prefix: str = 'c') -> 'ChernVector':
        return cls(tuple(var(f'{prefix}{i}') for i in range(1, rank + 1)), rank)

    def chern(self, i: int) -> Polynomial:
        if i == 0:
            return Polynomial.const(1)
        return self.c[i - 1] if i <= len(self.c) else Polynomial()

    def dual(self) -> 'ChernVector':
        return ChernVector(tuple(ci * (-1) ** i for i, ci in enumerate(self.c, start=1)), self.rank)

    def __add__(self, other: 'ChernVector') -> 'ChernVector':
        """Whitney sum: total Chern class is the product."""
        size = len(self.c) + len(other.c)
        classes = []
        for degree in range(1, size + 1):
            total = Polynomial()
            for i in range(degree + 1):
                total = total + self.chern(i) * other.chern(degree - i)
            classes.append(total)
        while classes and not classes[-1]:
            classes.pop()
        return ChernVector(tuple(classes), self.rank + other.rank)


def power_sums(cv: ChernVector, order: int) -> List[Polynomial]:
    """Newton power sums p_0..p_order of the Chern roots; p_0 is the rank."""
    sums = [Polynomial.const(cv.rank)]
    for k in range(1, order + 1):
        total = cv.chern(k) * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            total = total + cv.chern(i) * sums[k - i] * (-1) ** (i - 1)
        sums.append(total)
    return sums


def ch_from_chern(cv: ChernVector, order: int) -> GradedSeries:
    """Chern character r + p_1 + p_2/2! + ... up to the given order."""
    sums = power_sums(cv, order)
    factorial = 1
    components = [sums[0]]
    for k in range(1, order + 1):
        factorial *= k
        components.append(sums[k] / factorial)
    return GradedSeries(components)


def _log_todd(cv: ChernVector, order: int, sign: int) -> GradedSeries:
    coefficients = log_todd_coefficients(order)
    sums = power_sums(cv, order)
    return GradedSeries(
        [Polynomial()] + [sums[k] * (coefficients[k] * sign) for k in range(1, order + 1)]
    )


def td_series(cv: ChernVector, order: int) -> GradedSeries:
    """Todd class as exp of the power sums weighted by log(x/(1-e^-x))."""
    return _log_todd(cv, order, 1).exp()


def td_inverse_series(cv: ChernVector, order: int) -> GradedSeries:
    return _log_todd(cv, order, -1).exp()


def koszul_ch(codim: int, order: int) -> GradedSeries:
    """Alternating Chern character of the Koszul resolvent of a codim 1 or 2 locus.

    Codim 1 uses the divisor class Σ, codim 2 the normal bundle classes N1, N2.

    Raises:
        ValueError: For other codimensions
    """
    if codim == 1:
        divisor = ChernVector((var('Σ'),), 1)
        return GradedSeries.constant(1, order) - ch_from_chern(divisor.dual(), order)
    if codim == 2:
        normal = ChernVector((var('N1'), var('N2')), 2)
        determinant = ChernVector((var('N1'),), 1)
        return (
            GradedSeries.constant(1, order)
            - ch_from_chern(normal.dual(), order)
            + ch_from_chern(determinant.dual(), order)
        )
    raise ValueError(f'Koszul resolvents are implemented for codim 1 and 2, got {codim}')


def koszul_factor(codim: int, order: int) -> GradedSeries:
    """Factor F with koszul_ch(codim) = c_top * F, namely the inverse Todd class."""
    if codim == 1:
        return td_inverse_series(ChernVector((var('Σ'),), 1), order)
    if codim == 2:
        return td_inverse_series(ChernVector((var('N1'), var('N2')), 2), order)
    raise ValueError(f'Koszul resolvents are implemented for codim 1 and 2, got {codim}')


def exterior_alternating_ch(cv: ChernVector, order: int) -> GradedSeries:
    """Sum of (-1)^i ch(Λ^i E^∨) for a bundle of rank 1 or 2."""
    one = GradedSeries.constant(1, order)
    if cv.rank == 1:
        return one - ch_from_chern(cv.dual(), order)
    if cv.rank == 2:
        determinant = ChernVector((cv.chern(1),), 1)
        return one - ch_from_chern(cv.dual(), order) + ch_from_chern(determinant.dual(), order)
    raise ValueError(f'Exterior powers are implemented for rank 1 and 2, got {cv.rank}')


def codim2_top_class(order: int) -> GradedSeries:
    """Top Chern class N2 of a rank 2 normal bundle as a graded series."""
    return GradedSeries([Polynomial(), Polynomial(), var('N2')] + [Polynomial()] * (order - 2))


def node_character(order: int) -> GradedSeries:
    """Chern character of the node correction, minus the Koszul resolvent of the node locus.

    The node locus has codimension 2 and its normal bundle has c1 = -N and c2 = Δ, so the
    correction has total Chern class 1 + Δ/(1+N).
    """
    resolvent = codim2_top_class(order) * koszul_factor(2, order)
    return resolvent.substitute({'N1': -var('N'), 'N2': var('Δ')}).scale(-1)


def td_from_ch(ch: GradedSeries) -> GradedSeries:
    """Todd class of a virtual bundle given by its Chern character."""
    coefficients = log_todd_coefficients(ch.order)
    logarithm = [Polynomial()]
    factorial = 1
    for k in range(1, ch.order + 1):
        factorial *= k
        logarithm.append(ch.component(k) * (coefficients[k] * factorial))
    return GradedSeries(logarithm).exp()


@dataclass(frozen=True)
class GrrTerm:
    """One level of the GRR expansion: coefficient times a class in ω, N, Δ."""

    level: int
    coefficient: Fraction
    cls: Polynomial


def grr_rhs(order: int = MAX_ORDER) -> List[GrrTerm]:
    """Levels 1..order of td(ω) + td(node correction) - 2, normalized by the ω-coefficients.

    Levels where both parts vanish are omitted.
    """
    todd = todd_coefficients(order)
    nodes = td_from_ch(node_character(order))
    omega = var(OMEGA)

    terms = []
    for level in range(1, order + 1):
        total = omega ** level * todd[level] + nodes.component(level)
        if not total:
            continue
        coefficient = todd[level] if todd[level] else Fraction(1)
        terms.append(GrrTerm(level, coefficient, total / coefficient))
        logger.debug(f'GRR level {level}: {coefficient} * ({terms[-1].cls})')
    return terms
