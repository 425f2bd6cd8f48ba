"""Module for exact Hurwitz numbers by counting factorizations in the symmetric group."""

import itertools
import math
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from sympy.utilities.iterables import partitions

from hurwitz_strata.errors import ResourceBound, TooLarge
from hurwitz_strata.logger import get_logger
from hurwitz_strata.partitions import MultiPartition, ReducedPartition, m_count

# Largest degree handled without an explicit override
RESOURCE_BOUND = int(os.getenv('STRATA_ORACLE_MAX_N', '8'))

# Setup logger
logger = get_logger(__name__)

CycleType = Tuple[int, ...]
Permutation = Tuple[int, ...]
ClassVector = Dict[int, int]


def cycle_type_of(perm: Permutation) -> CycleType:
    """Cycle lengths of a permutation, sorted descending."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        point = start
        while not seen[point]:
            seen[point] = True
            point = perm[point]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The permutation i -> a[b[i]]."""
    return tuple(a[i] for i in b)


def inverse(perm: Permutation) -> Permutation:
    result = [0] * len(perm)
    for i, image in enumerate(perm):
        result[image] = i
    return tuple(result)


def identity(n: int) -> Permutation:
    return tuple(range(n))


def transposition_type(n: int) -> CycleType:
    return (2,) + (1,) * (n - 2)


def is_identity_type(cycle_type: CycleType) -> bool:
    return all(part == 1 for part in cycle_type)


def reduced_to_cycle_type(alpha: ReducedPartition, n: int) -> CycleType:
    """Cycle type with parts alpha_j+1, padded with fixed points to n.

    Raises:
        TooLarge: If the parts do not fit into n sheets
    """
    parts = [part + 1 for part in alpha.parts]
    if sum(parts) > n:
        raise TooLarge(f'{alpha} needs {sum(parts)} sheets, only {n} available')
    return tuple(sorted(parts + [1] * (n - sum(parts)), reverse=True))


@dataclass(frozen=True)
class FactorizationSpec:
    """Tuples (c_1..c_r, τ_1..τ_m) with c_i of the fixed cycle types and τ_j transpositions."""

    n: int
    fixed_classes: Tuple[CycleType, ...] = ()
    num_transpositions: int = 0
    require_transitive: bool = True
    override_bound: bool = field(default=False, compare=False)

    def __post_init__(self):
        classes = tuple(tuple(sorted(c, reverse=True)) for c in self.fixed_classes)
        for cycle_type in classes:
            if sum(cycle_type) != self.n:
                raise ValueError(f'Cycle type {cycle_type} is not a partition of {self.n}')
        object.__setattr__(self, 'fixed_classes', classes)

    @property
    def parity(self) -> int:
        """Total parity of the factors; odd parity admits no factorization of the identity."""
        total = sum(self.n - len(c) for c in self.fixed_classes) + self.num_transpositions
        return total % 2

    def check_bound(self) -> None:
        if self.n > RESOURCE_BOUND and not self.override_bound:
            raise ResourceBound(
                f'n={self.n} exceeds the oracle bound {RESOURCE_BOUND}; pass the override flag'
            )


class ClassAlgebra:
    """Center of the group ring of S_n in the basis of conjugacy-class sums."""

    def __init__(self, n: int):
        self.n = n
        self.classes: List[CycleType] = [
            tuple(sorted(
                (part for part, count in p.items() for _ in range(count)), reverse=True
            ))
            for p in partitions(n)
        ]
        self.index: Dict[CycleType, int] = {c: i for i, c in enumerate(self.classes)}
        self.sizes: List[int] = [self._class_size(c) for c in self.classes]
        self._structure = self._structure_constants()
        logger.debug(f'Class algebra of S_{n}: {len(self.classes)} classes')

    def _class_size(self, cycle_type: CycleType) -> int:
        counts = {part: cycle_type.count(part) for part in set(cycle_type)}
        centralizer = math.prod(
            part ** count * math.factorial(count) for part, count in counts.items()
        )
        return math.factorial(self.n) // centralizer

    def _representative(self, cycle_type: CycleType) -> Permutation:
        perm = list(range(self.n))
        start = 0
        for length in cycle_type:
            for offset in range(length):
                perm[start + offset] = start + (offset + 1) % length
            start += length
        return tuple(perm)

    def _structure_constants(self) -> Dict[Tuple[int, int, int], int]:
        """c[i, j, k] = #{x in C_i : x^-1 z_k in C_j} for a fixed z_k in C_k."""
        elements = [
            (inverse(perm), self.index[cycle_type_of(perm)])
            for perm in itertools.permutations(range(self.n))
        ]
        constants: Dict[Tuple[int, int, int], int] = {}
        for k, cycle_type in enumerate(self.classes):
            target = self._representative(cycle_type)
            for inverted, i in elements:
                j = self.index[cycle_type_of(compose(inverted, target))]
                constants[i, j, k] = constants.get((i, j, k), 0) + 1
        return constants

    def class_vector(self, cycle_type: CycleType) -> ClassVector:
        return {self.index[tuple(sorted(cycle_type, reverse=True))]: 1}

    def identity_vector(self) -> ClassVector:
        return {self.index[(1,) * self.n]: 1}

    def multiply(self, u: ClassVector, v: ClassVector) -> ClassVector:
        result: ClassVector = {}
        for (i, j, k), count in self._structure.items():
            if i in u and j in v:
                result[k] = result.get(k, 0) + u[i] * v[j] * count
        return {k: value for k, value in result.items() if value}


@lru_cache(maxsize=None)
def class_algebra(n: int) -> ClassAlgebra:
    return ClassAlgebra(n)


@lru_cache(maxsize=None)
def _count_all(n: int, classes: Tuple[CycleType, ...], transpositions: int) -> int:
    if n <= 1:
        return 0 if transpositions else 1
    algebra = class_algebra(n)
    vector = algebra.identity_vector()
    for cycle_type in classes:
        vector = algebra.multiply(vector, algebra.class_vector(cycle_type))
    step = algebra.class_vector(transposition_type(n))
    for _ in range(transpositions):
        vector = algebra.multiply(vector, step)
    return vector.get(algebra.index[(1,) * n], 0)


def _normalized(classes: Sequence[CycleType]) -> Tuple[CycleType, ...]:
    """Drop identity factors and sort, since the class algebra is commutative."""
    return tuple(sorted(c for c in classes if not is_identity_type(c)))


def count_all(spec: FactorizationSpec) -> int:
    """Number of tuples with product the identity, transitive or not.

    Raises:
        ResourceBound: If n exceeds the oracle bound
    """
    spec.check_bound()
    if spec.parity:
        return 0
    return _count_all(spec.n, _normalized(spec.fixed_classes), spec.num_transpositions)


def _submultisets_of_size(cycle_type: CycleType, total: int) -> List[CycleType]:
    """Distinct sub-multisets of the parts with the given sum."""
    found = set()
    for size in range(len(cycle_type) + 1):
        for combo in itertools.combinations(cycle_type, size):
            if sum(combo) == total:
                found.add(tuple(sorted(combo, reverse=True)))
    return sorted(found)


def _remove(cycle_type: CycleType, sub: CycleType) -> CycleType:
    rest = list(cycle_type)
    for part in sub:
        rest.remove(part)
    return tuple(sorted(rest, reverse=True))


def _splits(classes: Tuple[CycleType, ...], size: int):
    """Ways to cut every cycle type into an invariant block of the given size and the rest."""
    options = []
    for cycle_type in classes:
        subs = _submultisets_of_size(cycle_type, size)
        if not subs:
            return
        options.append([(sub, _remove(cycle_type, sub)) for sub in subs])
    for choice in itertools.product(*options):
        yield tuple(inside for inside, _ in choice), tuple(outside for _, outside in choice)


@lru_cache(maxsize=None)
def _count_connected(n: int, classes: Tuple[CycleType, ...], transpositions: int) -> int:
    """Transitive count by inclusion-exclusion over the size s of the orbit of sheet 1."""
    if n == 1:
        return 0 if transpositions else 1
    total = _count_all(n, _normalized(classes), transpositions)
    for size in range(1, n):
        labelings = math.comb(n - 1, size - 1)
        for inside, outside in _splits(classes, size):
            for chosen in range(transpositions + 1):
                inner = _count_connected(size, _normalized(inside), chosen)
                if not inner:
                    continue
                outer = _count_all(n - size, _normalized(outside), transpositions - chosen)
                total -= labelings * math.comb(transpositions, chosen) * inner * outer
    return total


def count_connected(spec: FactorizationSpec) -> int:
    """Number of tuples with product the identity generating a transitive subgroup.

    Raises:
        ResourceBound: If n exceeds the oracle bound
    """
    spec.check_bound()
    if spec.parity:
        return 0
    return _count_connected(spec.n, _normalized(spec.fixed_classes), spec.num_transpositions)


def count_factorizations(spec: FactorizationSpec) -> int:
    """Transitive or all factorizations, as spec.require_transitive asks.

    Raises:
        ResourceBound: If n exceeds the oracle bound
    """
    return count_connected(spec) if spec.require_transitive else count_all(spec)


def factorization_spec(
    label: MultiPartition, n: int, g: int = 0, override_bound: bool = False
) -> FactorizationSpec:
    """Monodromy data of covers with the given degenerate critical values."""
    classes = tuple(reduced_to_cycle_type(alpha, n) for alpha in label)
    return FactorizationSpec(n, classes, m_count(label, n, g), True, override_bound)


def hurwitz_oracle(
    label: MultiPartition, n: int, g: int = 0, override_bound: bool = False
) -> Fraction:
    """Hurwitz number as the number of transitive factorizations divided by n!.

    Raises:
        NegativeSimplePoints: If the label does not fit into genus g and degree n
        TooLarge: If a member needs more than n sheets
        ResourceBound: If n exceeds the oracle bound without override
    """
    spec = factorization_spec(label, n, g, override_bound)
    result = Fraction(count_factorizations(spec), math.factorial(n))
    logger.debug(f'Oracle h[{label}](n={n}, g={g}) = {result}')
    return result


def _elements_of_type(n: int, cycle_type: CycleType) -> List[Permutation]:
    return [perm for perm in itertools.permutations(range(n)) if cycle_type_of(perm) == cycle_type]


def _join_orbits(orbits: Tuple[int, ...], perm: Permutation) -> Tuple[int, ...]:
    """Merge the orbit labels (smallest point of each orbit) along the cycles of perm."""
    parent = list(orbits)

    def find(point: int) -> int:
        while parent[point] != point:
            point = parent[point]
        return point

    for point, image in enumerate(perm):
        a, b = find(point), find(image)
        if a != b:
            parent[max(a, b)] = min(a, b)
    return tuple(find(point) for point in range(len(perm)))


def count_naive(spec: FactorizationSpec) -> int:
    """Count factorizations by enumerating permutations of each prescribed type.

    Tuples are merged while they agree on the partial product and on the orbits generated
    so far, which keeps n = 5 within seconds. No class algebra is involved.
    """
    if spec.n <= 1:
        return 0 if spec.num_transpositions else 1
    types = list(spec.fixed_classes) + [transposition_type(spec.n)] * spec.num_transpositions
    pools = {cycle_type: _elements_of_type(spec.n, cycle_type) for cycle_type in set(types)}

    start = identity(spec.n)
    states: Counter = Counter({(start, start): 1})
    for cycle_type in types:
        following: Counter = Counter()
        for (product, orbits), ways in states.items():
            for perm in pools[cycle_type]:
                joined = _join_orbits(orbits, perm) if spec.require_transitive else orbits
                following[compose(product, perm), joined] += ways
        states = following

    connected = (0,) * spec.n
    return sum(
        ways
        for (product, orbits), ways in states.items()
        if product == start and (not spec.require_transitive or orbits == connected)
    )
