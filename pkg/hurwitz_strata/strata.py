"""Module for assembling stratum classes on the Hurwitz space from residual polynomials."""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from hurwitz_strata.algebra import (
    LinearSystem,
    Polynomial,
    SolveStatus,
    solve_linear,
    var,
)
from hurwitz_strata.errors import (
    ConventionMismatch,
    InconsistentSystem,
    SystemNotSquare,
    UnderDeterminedSystem,
    UnknownLabel,
)
from hurwitz_strata.golden import GENERAL_STRATA, GENUS0_STRATA
from hurwitz_strata.local_models import (
    DELTA,
    PSI,
    SIGMA,
    T,
    LocalModel,
    delta_part_monomials,
    exp_coefficient,
    i_models,
    local_push,
    local_stratum,
    residual_multising,
)
from hurwitz_strata.logger import get_logger
from hurwitz_strata.partitions import (
    MultiPartition,
    ReducedPartition,
    SSum,
    aut_order,
    aut_set_order,
    s_exp,
)
from hurwitz_strata.ring import YProduct, genus0_reduce, p_push, q_push_product

# Setup logger
logger = get_logger(__name__)

# Placeholder prefix for f_* of a residual polynomial inside exp expansions
PUSHED_PREFIX = 'F'

# Collisions of two critical values are resolved up to this codimension
MAX_PAIR_CODIM = 2

# A Morse point running into a degenerate critical point counts twice
DEGENERATE_MEETING = 2

Blocks = Tuple[ReducedPartition, ...]


@dataclass(frozen=True)
class StratumExpression:
    """Class of a stratum for arbitrary genus and its genus-zero reduction."""

    label: MultiPartition
    general_g: Polynomial
    genus0: Polynomial


def block_key(block: ReducedPartition) -> Tuple[int, Tuple[int, ...]]:
    return block.weight, block.parts


def slot_name(block: ReducedPartition) -> str:
    return SIGMA if block.is_nondegenerate else f'R[{block}]'


@dataclass(frozen=True)
class CollisionTerm:
    """coefficient * q*(Ψ_Y^psi_exp * product of f*(R_block)), with R_{1^1} = Σ."""

    blocks: Blocks
    psi_exp: int
    coefficient: Fraction

    @property
    def slots(self) -> Tuple[str, ...]:
        return tuple(slot_name(block) for block in self.blocks)

    def factors(self) -> Tuple[Polynomial, ...]:
        return tuple(residual_multising(block).value for block in self.blocks)

    def __str__(self):
        body = ' '.join(f'f*({slot})' for slot in self.slots)
        if self.psi_exp:
            body = f'Ψ_Y^{self.psi_exp} {body}'
        return f'{self.coefficient} * q*({body})'


@dataclass(frozen=True)
class MultiResidual:
    """Residual polynomial of a multimultisingularity with its collision terms."""

    label: MultiPartition
    value: Polynomial
    collisions: Tuple[CollisionTerm, ...]

    def __str__(self):
        return self.value.to_text()


def _pushed_name(beta: ReducedPartition) -> str:
    return f'{PUSHED_PREFIX}[{beta}]'


def assemble_single(alpha: ReducedPartition) -> Polynomial:
    """σ_alpha = q_* of the x^alpha coefficient of exp(sum f_*(R_beta) x^beta/beta!).

    Products of pushed residuals are expanded symbolically first, then each product is
    sent through q_* term by term.
    """
    pushed = {beta: var(_pushed_name(beta)) for beta in alpha.submultisets()}
    residuals = {_pushed_name(beta): residual_multising(beta).value for beta in pushed}
    expansion = exp_coefficient(alpha, pushed) / aut_order(alpha)

    result = Polynomial()
    for mono, coef in expansion.items():
        factors = []
        for name, exp in mono:
            factors.extend([residuals[name]] * exp)
        result = result + q_push_product(YProduct(tuple(factors), coefficient=coef))
    return result


def degenerate_parts(label: MultiPartition) -> List[ReducedPartition]:
    """Degenerate reduced partitions contained in some member of the label."""
    found = set()
    for member in label:
        for sub in member.submultisets():
            if not sub.is_nondegenerate:
                found.add(sub)
    return sorted(found, key=block_key)


def product_part(label: MultiPartition) -> Polynomial:
    """Coefficient of s_label in the s-exponential of the single-value strata."""
    generators = SSum({
        MultiPartition.single(gamma): assemble_single(gamma) for gamma in degenerate_parts(label)
    })
    return s_exp(generators, label.weight).coefficient(label)


def residual_norm(label: MultiPartition) -> int:
    """Normalization dividing p_*(R_label) in the assembled class."""
    norm = aut_set_order(label)
    for member in label:
        norm *= aut_order(member)
    return norm


def configurations(alpha: ReducedPartition) -> Dict[Blocks, Fraction]:
    """Groupings of the critical points over one value of type alpha, weighted as in σ_alpha.

    Each grouping lists the blocks whose residual polynomials are multiplied in σ_alpha.
    """
    placeholders = {beta: var(_pushed_name(beta)) for beta in alpha.submultisets()}
    blocks_of = {_pushed_name(beta): beta for beta in placeholders}
    expansion = exp_coefficient(alpha, placeholders) / aut_order(alpha)

    result = {}
    for mono, coef in expansion.items():
        blocks: List[ReducedPartition] = []
        for name, exp in mono:
            blocks.extend([blocks_of[name]] * exp)
        result[tuple(sorted(blocks, key=block_key))] = coef
    return result


def coincidences(first: Blocks, second: Blocks) -> Iterator[Tuple[Blocks, int, int]]:
    """Ways for points of two groupings to coincide, forcing both onto one critical value.

    Yields the blocks left over one value, the Ψ_Y exponent and a signed count. A Morse
    point of one grouping may coincide with any point of the other; two degenerate points
    never do. Two Morse points of each grouping meeting pairwise add back one Ψ_Y.
    """
    for i, a in enumerate(first):
        for j, b in enumerate(second):
            if not (a.is_nondegenerate or b.is_nondegenerate):
                continue
            if a.is_nondegenerate:
                rest = first[:i] + first[i + 1:] + second
            else:
                rest = first + second[:j] + second[j + 1:]
            both = a.is_nondegenerate and b.is_nondegenerate
            yield rest, 0, -(1 if both else DEGENERATE_MEETING)

    morse_first = [i for i, a in enumerate(first) if a.is_nondegenerate]
    morse_second = [j for j, b in enumerate(second) if b.is_nondegenerate]
    for pair in itertools.combinations(morse_first, 2):
        for _ in itertools.permutations(morse_second, 2):
            rest = tuple(a for i, a in enumerate(first) if i not in pair) + second
            yield rest, 1, 1


def collision_terms(label: MultiPartition) -> Tuple[CollisionTerm, ...]:
    """Correction terms for products of two single-value strata meeting over one value.

    Raises:
        ValueError: If the label does not have exactly two critical values
    """
    if len(label) != 2:
        raise ValueError(f'Collisions are defined for two critical values, got {label}')
    first, second = label.parts
    scale = Fraction(1, aut_set_order(label))

    found: Dict[Tuple[Blocks, int], Fraction] = {}
    for blocks_a, coef_a in configurations(first).items():
        for blocks_b, coef_b in configurations(second).items():
            for rest, psi_exp, count in coincidences(blocks_a, blocks_b):
                key = (tuple(sorted(rest, key=block_key)), psi_exp)
                found[key] = found.get(key, Fraction(0)) + scale * coef_a * coef_b * count

    ordered = sorted(found.items(), key=lambda item: (
        item[0][1], [block_key(block) for block in item[0][0]]
    ))
    return tuple(
        CollisionTerm(blocks, psi_exp, coef) for (blocks, psi_exp), coef in ordered if coef
    )


def pair_residual_monomials(weight: int) -> List[Polynomial]:
    """Monomials of a residual polynomial of the given weight that survive p_*."""
    sigma, psi_x = var(SIGMA), var(PSI)
    monomials = [sigma ** a * psi_x ** (weight - a) for a in range(weight, 0, -1)]
    monomials.extend(mono * var(DELTA) for mono in delta_part_monomials(weight - 2))
    return monomials


def pair_models(label: MultiPartition) -> List[LocalModel]:
    """Models whose base misses the stratum.

    These are A_k with fewer than label.weight critical points and I_{k,l} with k+l at most
    codim+1.
    """
    a_models = [LocalModel.a(k) for k in range(1, label.weight)]
    return a_models + i_models(label.codim + 1)


def local_class(
    label: MultiPartition,
    residual: Polynomial,
    collisions: Tuple[CollisionTerm, ...],
    model: LocalModel,
) -> Polynomial:
    """Assembled class of a stratum with several critical values in the base of a model."""
    substitution = model.substitution()
    degree = model.degree_f
    generators = SSum({
        MultiPartition.single(gamma): local_stratum(gamma, model)
        for gamma in degenerate_parts(label)
    })
    total = s_exp(generators, label.weight).coefficient(label)
    own = degree * residual.substitute(substitution)
    total = total + local_push(own, model) / residual_norm(label)
    for term in collisions:
        product = substitution[PSI] ** term.psi_exp * term.coefficient
        for factor in term.factors():
            product = product * degree * factor.substitute(substitution)
        total = total + local_push(product, model)
    return total


@lru_cache(maxsize=None)
def residual_multimulti(label: MultiPartition) -> MultiResidual:
    """Residual polynomial and collision terms of a label with two critical values.

    The residual polynomial is the unique one for which the assembled class vanishes in
    every local model whose base misses the stratum.

    Raises:
        UnknownLabel: If the label lies beyond the resolved codimension
        SystemNotSquare: If the model count differs from the unknown count
        InconsistentSystem: If the vanishing constraints have no solution
        UnderDeterminedSystem: If the vanishing constraints do not fix the residual
    """
    label.validate_stratum()
    if len(label) < 2:
        raise ValueError(f'{label} has a single critical value, use residual_multising')
    if label.codim > MAX_PAIR_CODIM:
        raise UnknownLabel(f'No collision rule for {label} beyond codimension {MAX_PAIR_CODIM}')

    collisions = collision_terms(label)
    monomials = pair_residual_monomials(label.codim + 1)
    models = pair_models(label)
    if len(models) != len(monomials):
        raise SystemNotSquare(
            f'R[{label}]: {len(models)} vanishing models for {len(monomials)} unknowns'
        )

    unknowns = [f'r{index}' for index in range(len(monomials))]
    candidate = Polynomial()
    for name, mono in zip(unknowns, monomials):
        candidate = candidate + var(name) * mono

    forms = []
    for model in models:
        forms.extend(local_class(label, candidate, collisions, model).collect([T]).values())
    result = solve_linear(LinearSystem.from_linear_forms(unknowns, forms))
    if result.status is SolveStatus.INCONSISTENT:
        raise InconsistentSystem(f'R[{label}]: vanishing constraints are inconsistent')
    if result.status is SolveStatus.UNDERDETERMINED:
        raise UnderDeterminedSystem(f'R[{label}]: vanishing constraints do not fix R')

    value = candidate.substitute(result.solution)
    logger.info(f'R[{label}] = {value.to_text()} with {len(collisions)} collision terms')
    return MultiResidual(label, value, collisions)


def assemble_multi(label: MultiPartition) -> Polynomial:
    residual = residual_multimulti(label)
    result = product_part(label) + p_push(residual.value) / residual_norm(label)
    for term in residual.collisions:
        product = YProduct(term.factors(), term.psi_exp, 0, term.coefficient)
        result = result + q_push_product(product)
    return result


@lru_cache(maxsize=None)
def _assemble(label: MultiPartition) -> Polynomial:
    if not len(label):
        return Polynomial.const(1)
    label.validate_stratum()
    if len(label) == 1:
        return assemble_single(label.parts[0])
    return assemble_multi(label)


def assemble(label: MultiPartition, compare: bool = False) -> StratumExpression:
    """Class of the stratum σ_label in ψ, ξ_k and δ_{k,l} with ξ_0 kept symbolic.

    Args:
        label: Stratum label; the empty label is the whole space
        compare: Check the result against the stored class when one exists

    Returns:
        StratumExpression with the general and genus-zero classes

    Raises:
        ConventionMismatch: If compare is set and the stored class differs
        UnknownLabel: For labels with several critical values and no stored class
    """
    general = _assemble(label)
    if compare and str(label) in GENERAL_STRATA and GENERAL_STRATA[str(label)] != general:
        raise ConventionMismatch(
            f'σ[{label}] assembled as {general.to_text()}, '
            f'stored {GENERAL_STRATA[str(label)].to_text()}'
        )
    return StratumExpression(label, general, genus0_reduce(general))


def sigma_g0(label: MultiPartition) -> Polynomial:
    return assemble(label).genus0


def stored_stratum(label: MultiPartition, genus0: bool = False) -> Polynomial:
    """Stored class of a stratum.

    Raises:
        UnknownLabel: If the label is not tabulated
    """
    table = GENUS0_STRATA if genus0 else GENERAL_STRATA
    try:
        return table[str(label)]
    except KeyError:
        raise UnknownLabel(f'No stored class for {label}') from None


def collision_table(labels: List[MultiPartition]) -> Dict[str, Tuple[CollisionTerm, ...]]:
    return {str(label): residual_multimulti(label).collisions for label in labels}
