"""Module for reduced partitions, multipartitions and the s-variable merge algebra."""

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from hurwitz_strata.algebra import Polynomial
from hurwitz_strata.errors import NegativeSimplePoints, PartitionSyntaxError
from hurwitz_strata.logger import get_logger

# Setup logger
logger = get_logger(__name__)

FACTOR_PATTERN = re.compile(r'^(\d+)(?:\^(\d+))?$')


@dataclass(frozen=True, order=True)
class ReducedPartition:
    """Multiplicities of the preimages of one critical value, each decreased by one.

    Parts are stored sorted descending, so 1^2 2^1 is (2, 1, 1).
    """

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(part) for part in self.parts), reverse=True))
        if any(part <= 0 for part in parts):
            raise PartitionSyntaxError(f'Parts must be positive: {parts}')
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def parse(cls, text: str) -> 'ReducedPartition':
        """Parse '1^2,2^1' (or '1^2 2^1') into a reduced partition."""
        parts: List[int] = []
        for factor in re.split(r'[,\s]+', text.strip()):
            if not factor:
                continue
            match = FACTOR_PATTERN.match(factor)
            if not match:
                raise PartitionSyntaxError(f'Cannot parse partition factor {factor!r}')
            value = int(match.group(1))
            count = int(match.group(2) or 1)
            if value <= 0 or count <= 0:
                raise PartitionSyntaxError(f'Nonpositive value in factor {factor!r}')
            parts.extend([value] * count)
        return cls(tuple(parts))

    def __str__(self):
        counts = self.multiplicities()
        return ','.join(f'{value}^{counts[value]}' for value in sorted(counts))

    def __len__(self):
        return len(self.parts)

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def codim(self) -> int:
        return self.weight - 1

    @property
    def is_nondegenerate(self) -> bool:
        return self.parts == (1,)

    def union(self, other: 'ReducedPartition') -> 'ReducedPartition':
        return ReducedPartition(self.parts + other.parts)

    def submultisets(self) -> List['ReducedPartition']:
        """All nonempty sub-multisets, ordered by weight then parts."""
        counts = self.multiplicities()
        values = sorted(counts)
        result = []
        for choice in itertools.product(*(range(counts[value] + 1) for value in values)):
            parts = tuple(
                value for value, count in zip(values, choice) for _ in range(count)
            )
            if parts:
                result.append(ReducedPartition(parts))
        return sorted(result, key=lambda sub: (sub.weight, sub.parts))

    def contains(self, other: 'ReducedPartition') -> bool:
        mine = Counter(self.parts)
        return all(mine[value] >= count for value, count in Counter(other.parts).items())


def aut_order(alpha: ReducedPartition) -> int:
    """Product of factorials of the multiplicities of equal parts."""
    return math.prod(math.factorial(count) for count in alpha.multiplicities().values())


@dataclass(frozen=True)
class MultiPartition:
    """Reduced partitions of several critical values, stored in canonical order."""

    parts: Tuple[ReducedPartition, ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted(self.parts, key=lambda part: part.parts, reverse=True))
        object.__setattr__(self, 'parts', ordered)

    @classmethod
    def parse(cls, text: str) -> 'MultiPartition':
        """Parse '2^1;1^2' into a multipartition, ';' separating critical values.

        Raises:
            PartitionSyntaxError: If some critical value has no partition
        """
        text = text.strip()
        if not text:
            return cls(())
        parts = tuple(ReducedPartition.parse(chunk) for chunk in text.split(';'))
        if any(not part.parts for part in parts):
            raise PartitionSyntaxError(f'Empty critical value in {text!r}')
        return cls(parts)

    @classmethod
    def single(cls, alpha: ReducedPartition) -> 'MultiPartition':
        return cls((alpha,))

    def __str__(self):
        return ';'.join(str(part) for part in self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self) -> Iterator[ReducedPartition]:
        return iter(self.parts)

    def __add__(self, other: 'MultiPartition') -> 'MultiPartition':
        return MultiPartition(self.parts + other.parts)

    @property
    def weight(self) -> int:
        return sum(part.weight for part in self.parts)

    @property
    def codim(self) -> int:
        return sum(part.codim for part in self.parts)

    def validate_stratum(self) -> 'MultiPartition':
        """Reject the nondegenerate partition 1^1 as a stratum member.

        Raises:
            PartitionSyntaxError: If some member is 1^1
        """
        if any(part.is_nondegenerate for part in self.parts):
            raise PartitionSyntaxError(f'1^1 is not a degenerate critical value in {self}')
        return self


def aut_set_order(label: MultiPartition) -> int:
    """Product of factorials of the multiplicities of coinciding reduced partitions."""
    counts = Counter(label.parts)
    return math.prod(math.factorial(count) for count in counts.values())


def weight(alpha: ReducedPartition) -> int:
    return alpha.weight


def codim(label: MultiPartition) -> int:
    return label.codim


def m_count(label: MultiPartition, n: int, g: int = 0) -> int:
    """Number of simple critical values left by the Riemann-Hurwitz count.

    Raises:
        NegativeSimplePoints: If the count is negative
    """
    count = 2 * n + 2 * g - 2 - label.weight
    if count < 0:
        raise NegativeSimplePoints(f'{label} needs more than 2n+2g-2 = {2 * n + 2 * g - 2}')
    return count


Coefficient = Union[int, Fraction, Polynomial]


def merges(first: MultiPartition, second: MultiPartition) -> Iterator[MultiPartition]:
    """Every way to unite distinct members of first with distinct members of second.

    Members are distinguished by position, so equal partitions give repeated results.
    """
    size_a, size_b = len(first), len(second)
    for count in range(min(size_a, size_b) + 1):
        for chosen_a in itertools.combinations(range(size_a), count):
            for chosen_b in itertools.permutations(range(size_b), count):
                merged = [first.parts[i].union(second.parts[j]) for i, j in zip(chosen_a, chosen_b)]
                rest_a = [part for i, part in enumerate(first.parts) if i not in chosen_a]
                rest_b = [part for j, part in enumerate(second.parts) if j not in chosen_b]
                yield MultiPartition(tuple(merged + rest_a + rest_b))


class SSum:
    """Formal linear combination of the variables s_{alpha_1,...,alpha_c}."""

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Mapping[MultiPartition, Coefficient]] = None):
        self._terms: Dict[MultiPartition, Polynomial] = {}
        for label, coef in (terms or {}).items():
            value = Polynomial.lift(coef)
            if value:
                self._terms[label] = self._terms.get(label, Polynomial()) + value

    @classmethod
    def variable(cls, label: MultiPartition, coef: Coefficient = 1) -> 'SSum':
        return cls({label: coef})

    def terms(self) -> Dict[MultiPartition, Polynomial]:
        return dict(self._terms)

    def coefficient(self, label: MultiPartition) -> Polynomial:
        return self._terms.get(label, Polynomial())

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: 'SSum') -> 'SSum':
        terms = dict(self._terms)
        for label, coef in other._terms.items():
            terms[label] = terms.get(label, Polynomial()) + coef
        return SSum({label: coef for label, coef in terms.items() if coef})

    def scale(self, factor: Coefficient) -> 'SSum':
        return SSum({label: coef * factor for label, coef in self._terms.items()})

    def __mul__(self, other: 'SSum') -> 'SSum':
        return s_multiply(self, other)

    def truncate(self, max_weight: int) -> 'SSum':
        return SSum({
            label: coef for label, coef in self._terms.items() if label.weight <= max_weight
        })

    def __repr__(self):
        body = ' + '.join(f'({coef})*s[{label}]' for label, coef in self._terms.items())
        return f'SSum({body or "0"})'


def s_multiply(first: SSum, second: SSum) -> SSum:
    """Bilinear extension of the merge rule for s-variables."""
    terms: Dict[MultiPartition, Polynomial] = {}
    for label_a, coef_a in first.terms().items():
        for label_b, coef_b in second.terms().items():
            product = coef_a * coef_b
            for merged in merges(label_a, label_b):
                terms[merged] = terms.get(merged, Polynomial()) + product
    return SSum(terms)


def s_exp(generators: SSum, max_weight: int) -> SSum:
    """Exponential in the s-algebra, truncated to labels of weight at most max_weight.

    Raises:
        ValueError: If the generators contain the empty label
    """
    empty = MultiPartition(())
    if generators.coefficient(empty):
        raise ValueError('Cannot exponentiate a sum with a constant term')
    lightest = min((label.weight for label in generators.terms()), default=0)
    result = SSum.variable(empty)
    power = SSum.variable(empty)
    order = 1
    while lightest and order * lightest <= max_weight:
        power = (power * generators).truncate(max_weight).scale(Fraction(1, order))
        result = result + power
        order += 1
    return result
