"""Module for local models A_k and I_{k,l} and residual polynomials of multisingularities."""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Union

from hurwitz_strata.algebra import (
    LinearSystem,
    Polynomial,
    SolveStatus,
    falling_factorial,
    solve_linear,
    var,
    weighted_degree,
)
from hurwitz_strata.cache import RESIDUALS, ResidualCache
from hurwitz_strata.errors import InconsistentSystem, SystemNotSquare, UnderDeterminedSystem
from hurwitz_strata.logger import get_logger
from hurwitz_strata.partitions import MultiPartition, ReducedPartition, aut_order

# Basic classes on the universal curve
SIGMA = 'Σ'
PSI = 'Ψ'
PI = 'Π'
DELTA = 'Δ'
NORMAL = 'N'
T = 't'

# Weights of quasihomogeneity for residual polynomials
RESIDUAL_WEIGHTS = {SIGMA: 1, PSI: 1, NORMAL: 1, DELTA: 2}

# Setup logger
logger = get_logger(__name__)


@dataclass(frozen=True)
class LocalModel:
    """Miniversal unfolding of A_k (kind 'A') or I_{k,l} (kind 'I')."""

    kind: str
    k: int
    l: int = 0

    def __post_init__(self):
        if self.kind == 'A':
            if self.k < 1 or self.l:
                raise ValueError(f'A_k needs k >= 1, got k={self.k}, l={self.l}')
        elif self.kind == 'I':
            if not self.k >= self.l >= 1:
                raise ValueError(f'I_(k,l) needs k >= l >= 1, got k={self.k}, l={self.l}')
        else:
            raise ValueError(f'Unknown local model kind {self.kind!r}')

    @classmethod
    def a(cls, k: int) -> 'LocalModel':
        return cls('A', k)

    @classmethod
    def i(cls, k: int, l: int) -> 'LocalModel':
        return cls('I', k, l)

    @property
    def weights(self) -> List[int]:
        """Weights of the C*-action on the base of the unfolding."""
        if self.kind == 'A':
            return list(range(1, self.k + 1))
        k, l = self.k, self.l
        return [l] + [j * l for j in range(1, k)] + [k] + [j * k for j in range(1, l)]

    @property
    def degree_f(self) -> int:
        """Number of critical points of f on a general fiber."""
        return self.k + 1 if self.kind == 'A' else self.k + self.l

    @property
    def dim(self) -> int:
        """Dimension of the projectivized base."""
        return len(self.weights) - 1

    def substitution(self) -> Dict[str, Polynomial]:
        """Basic classes expressed through the generator t of the weighted projective space."""
        t = var(T)
        if self.kind == 'A':
            return a_substitution(self.k)
        kl = self.k * self.l
        return {
            SIGMA: kl * t,
            PSI: kl * t,
            NORMAL: (self.k + self.l) * t,
            DELTA: kl * t ** 2,
        }

    def __str__(self):
        return f'A_{self.k}' if self.kind == 'A' else f'I_{self.k},{self.l}'


def a_substitution(k: Union[int, Polynomial]) -> Dict[str, Polynomial]:
    """A_k substitution; k may be a number or the symbol k."""
    t = var(T)
    return {SIGMA: k * t, PSI: (k + 1) * t, DELTA: Polynomial()}


def i_models(max_total: int) -> List[LocalModel]:
    """I_{k,l} models with k >= l >= 1 and k+l <= max_total, by increasing k+l then k."""
    models = []
    for total in range(2, max_total + 1):
        for l in range(1, total // 2 + 1):
            models.append(LocalModel.i(total - l, l))
    return sorted(models, key=lambda model: (model.k + model.l, model.k))


def wps_degree(weights: Sequence[int]) -> Fraction:
    """Degree of the weighted projective space with the given weights.

    Raises:
        ValueError: If the weight list is empty or has nonpositive entries
    """
    if not weights or any(w <= 0 for w in weights):
        raise ValueError(f'Weights must be a nonempty list of positive integers: {weights}')
    return Fraction(1, math.prod(weights))


def thom_Ai(i: int) -> Polynomial:
    """Thom polynomial Σ(2Σ-Ψ)(3Σ-2Ψ)...(iΣ-(i-1)Ψ) of the A_i stratum."""
    if i < 1:
        raise ValueError(f'thom_Ai needs i >= 1, got {i}')
    sigma, psi = var(SIGMA), var(PSI)
    result = sigma
    for j in range(2, i + 1):
        result = result * (j * sigma - (j - 1) * psi)
    return result


def gen_series_coefficient(alpha: ReducedPartition, k: Union[int, Polynomial]):
    """Pochhammer coefficient (k+1)_{|alpha|+len(alpha)} of the generating series."""
    return falling_factorial(k + 1, alpha.weight + len(alpha))


def delta_part_monomials(weight: int) -> List[Polynomial]:
    """Monomials N^a Ψ^b Δ^c with a+b+2c = weight."""
    if weight < 0:
        return []
    monomials = []
    for c in range(weight // 2 + 1):
        rest = weight - 2 * c
        for a in range(rest, -1, -1):
            monomials.append(var(NORMAL) ** a * var(PSI) ** (rest - a) * var(DELTA) ** c)
    return monomials


def x_variable(value: int) -> str:
    return f'x{value}'


def x_monomial(beta: ReducedPartition) -> Polynomial:
    result = Polynomial.const(1)
    for value, count in beta.multiplicities().items():
        result = result * var(x_variable(value)) ** count
    return result


def x_coefficient(series: Polynomial, alpha: ReducedPartition) -> Polynomial:
    """Coefficient of x^alpha in a polynomial in the x-variables and other symbols."""
    names = [x_variable(value) for value in alpha.multiplicities()]
    target = tuple(sorted(
        (x_variable(value), count) for value, count in alpha.multiplicities().items()
    ))
    return series.collect(names).get(target, Polynomial())


def exp_coefficient(
    alpha: ReducedPartition, values: Mapping[ReducedPartition, Polynomial]
) -> Polynomial:
    """alpha! times the coefficient of x^alpha in exp(sum over beta of values[beta] x^beta/beta!).

    The sum runs over the nonempty sub-multisets beta of alpha; missing values count as zero.
    """
    bounds = {x_variable(value): count for value, count in alpha.multiplicities().items()}
    generator = Polynomial()
    for beta in alpha.submultisets():
        if beta in values:
            generator = generator + values[beta] * x_monomial(beta) / aut_order(beta)

    total = Polynomial.const(1)
    power = Polynomial.const(1)
    for order in range(1, len(alpha) + 1):
        power = (power * generator).truncate(bounds) / order
        total = total + power
    return x_coefficient(total, alpha) * aut_order(alpha)


def sigma_psi_part(alpha: ReducedPartition) -> Polynomial:
    """Σ,Ψ-part of the residual polynomial from the logarithm of the generating series.

    Works with K = k+1 so that the division by k+1 is a shift of exponents, then
    rewrites k^j t^w as Σ^j (Ψ-Σ)^(w-j).
    """
    shifted = var('K')
    bounds = {x_variable(value): count for value, count in alpha.multiplicities().items()}

    series = Polynomial()
    for beta in alpha.submultisets():
        coefficient = falling_factorial(shifted, beta.weight + len(beta))
        series = series + coefficient * var(T) ** beta.weight * x_monomial(beta) / aut_order(beta)

    logarithm = Polynomial()
    power = Polynomial.const(1)
    for order in range(1, len(alpha) + 1):
        power = (power * series).truncate(bounds)
        logarithm = logarithm + power * Fraction((-1) ** (order + 1), order)

    coefficient = x_coefficient(logarithm, alpha) * aut_order(alpha)
    in_k = coefficient.divide_by_variable('K').substitute({'K': var('k') + 1})
    return rewrite_k_t(in_k, alpha.weight)


def rewrite_k_t(poly: Polynomial, weight: int) -> Polynomial:
    """Rewrite a polynomial c_j k^j t^weight as a polynomial in Σ and Ψ.

    Raises:
        ValueError: If a term has the wrong power of t or too high a power of k
    """
    sigma, psi = var(SIGMA), var(PSI)

    def rewrite(mono, coef):
        powers = dict(mono)
        k_exp = powers.pop('k', 0)
        t_exp = powers.pop(T, 0)
        if powers or t_exp != weight or k_exp > weight:
            raise ValueError(f'Term k^{k_exp} t^{t_exp} cannot be rewritten at weight {weight}')
        return coef * sigma ** k_exp * (psi - sigma) ** (weight - k_exp)

    return poly.map_terms(rewrite)


def solve_delta_part(
    base: Polynomial,
    weight: int,
    vanishing: Callable[[Polynomial, LocalModel], Polynomial],
    name: str,
) -> Polynomial:
    """Complete base by a Δ-part so that vanishing(candidate, model) = 0 on every I_{k,l}.

    Args:
        base: Known Σ,Ψ-part of the residual polynomial
        weight: Weighted degree of the residual polynomial
        vanishing: Class of the stratum in a model, as a polynomial in t and the unknowns
        name: Label used in log and error messages

    Returns:
        base plus the unique Δ-part

    Raises:
        SystemNotSquare: If the model count differs from the unknown count
        InconsistentSystem: If the constraints have no solution
        UnderDeterminedSystem: If the constraints do not fix the Δ-part
    """
    monomials = delta_part_monomials(weight - 2)
    models = i_models(weight)
    if len(models) != len(monomials):
        raise SystemNotSquare(
            f'{name}: {len(models)} vanishing models for {len(monomials)} unknown coefficients'
        )
    if not monomials:
        return base

    unknowns = [f'u{index}' for index in range(len(monomials))]
    candidate = base
    for unknown, monomial in zip(unknowns, monomials):
        candidate = candidate + var(unknown) * monomial * var(DELTA)

    forms = []
    for model in models:
        restricted = vanishing(candidate, model)
        forms.extend(restricted.collect([T]).values())

    result = solve_linear(LinearSystem.from_linear_forms(unknowns, forms))
    if result.status is SolveStatus.INCONSISTENT:
        raise InconsistentSystem(f'{name}: vanishing constraints are inconsistent')
    if result.status is SolveStatus.UNDERDETERMINED:
        raise UnderDeterminedSystem(f'{name}: vanishing constraints do not fix the Δ-part')

    logger.debug(f'{name}: solved {len(unknowns)} coefficients {result.solution}')
    return candidate.substitute(result.solution)


def solve_Q(i: int) -> Polynomial:
    """Polynomial Q_{i-2} with R_i = P_i + Q_{i-2}Δ vanishing on all I_{k,l} with k+l <= i."""
    if i < 2:
        raise ValueError(f'solve_Q needs i >= 2, got {i}')
    thom = thom_Ai(i)

    def vanishing(candidate: Polynomial, model: LocalModel) -> Polynomial:
        return candidate.substitute(model.substitution())

    residual = solve_delta_part(thom, i, vanishing, f'A_{i}')
    return (residual - thom).divide_by_variable(DELTA)


@dataclass(frozen=True)
class ResidualPolynomial:
    """Residual polynomial of a (multi)multisingularity label."""

    label: MultiPartition
    value: Polynomial

    @property
    def weight(self) -> int:
        return weighted_degree(self.value, RESIDUAL_WEIGHTS)

    def __str__(self):
        return self.value.to_text()


def model_values(
    alpha: ReducedPartition, model: LocalModel, cache: ResidualCache
) -> Dict[ReducedPartition, Polynomial]:
    """f_* of the known lower residual polynomials restricted to a model."""
    substitution = model.substitution()
    return {
        beta: model.degree_f * residual_multising(beta, cache).value.substitute(substitution)
        for beta in alpha.submultisets()
        if beta != alpha
    }


def residual_multising(
    alpha: ReducedPartition, cache: Optional[ResidualCache] = None
) -> ResidualPolynomial:
    """Residual polynomial R_alpha of a multisingularity over one critical value."""
    if not alpha.parts:
        raise ValueError('Residual polynomials need a nonempty partition')
    cache = cache if cache is not None else RESIDUALS
    label = MultiPartition.single(alpha)

    def compute() -> Polynomial:
        logger.info(f'Computing residual polynomial R[{alpha}]')
        base = sigma_psi_part(alpha)

        def vanishing(candidate: Polynomial, model: LocalModel) -> Polynomial:
            values = model_values(alpha, model, cache)
            values[alpha] = model.degree_f * candidate.substitute(model.substitution())
            return exp_coefficient(alpha, values)

        return solve_delta_part(base, alpha.weight, vanishing, f'R[{alpha}]')

    return ResidualPolynomial(label, cache.get_or_compute(str(label), compute))


def q_table(max_i: int) -> Dict[int, Polynomial]:
    return {i: solve_Q(i) for i in range(2, max_i + 1)}


def unknown_counts(i: int) -> Dict[str, int]:
    """Monomial and model counts of the Q_{i-2} problem, both equal to floor(i^2/4)."""
    return {
        'monomials': len(delta_part_monomials(i - 2)),
        'models': len(i_models(i)),
        'expected': i * i // 4,
    }


def local_push(poly: Polynomial, model: LocalModel) -> Polynomial:
    """Pushforward from the target of a model to its base.

    Classes of a model are multiples of powers of t, and the pushforward divides by the class
    Ψ of the target coordinate.
    """
    psi_weight = model.substitution()[PSI].divide_by_variable(T).constant_term()
    return poly.divide_by_variable(T) / psi_weight


def local_stratum(
    alpha: ReducedPartition, model: LocalModel, cache: Optional[ResidualCache] = None
) -> Polynomial:
    """Class in the base of a model of the stratum with one critical value of type alpha."""
    cache = cache if cache is not None else RESIDUALS
    values = model_values(alpha, model, cache)
    own = residual_multising(alpha, cache).value.substitute(model.substitution())
    values[alpha] = model.degree_f * own
    return local_push(exp_coefficient(alpha, values), model) / aut_order(alpha)
