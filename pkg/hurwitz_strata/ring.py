"""Module for the ring of basic classes on the universal curve and the Gysin pushforwards."""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

from hurwitz_strata.algebra import Polynomial, make_monomial, var
from hurwitz_strata.errors import ExpressionSyntaxError, MalformedClass, PoleObstruction
from hurwitz_strata.grr import OMEGA, grr_rhs
from hurwitz_strata.local_models import DELTA, NORMAL, PI, PSI, SIGMA
from hurwitz_strata.logger import get_logger

# Classes on the Hurwitz space
PSI_B = 'ψ'
N_SYMBOL = 'n'
G_SYMBOL = 'g'

# Cohomological degrees of the basic classes on the universal curve
X_WEIGHTS = {SIGMA: 1, PSI: 1, PI: 1, NORMAL: 1, DELTA: 2}

# Setup logger
logger = get_logger(__name__)

Powers = Dict[str, int]
RuleResult = Optional[Tuple[int, Powers]]


def xi(k: int) -> Polynomial:
    """ξ_k = p_*(Σ^(k+1))."""
    return var(xi_name(k))


def xi_name(k: int) -> str:
    return f'ξ{k}'


def delta(k: int, l: int) -> Polynomial:
    """δ_{k,l} = p_*(N^k Δ^(l+1))."""
    return var(delta_name(k, l))


def delta_name(k: int, l: int) -> str:
    return f'δ{k},{l}'


def psi() -> Polynomial:
    return var(PSI_B)


def _pi_square(powers: Powers) -> RuleResult:
    if powers.get(PI, 0) < 2:
        return None
    result = dict(powers)
    result[PI] -= 1
    result[PSI] = result.get(PSI, 0) + 1
    return -1, result


def _sigma_pi(powers: Powers) -> RuleResult:
    if powers.get(SIGMA, 0) and powers.get(PI, 0):
        return 0, {}
    return None


def _pi_delta(powers: Powers) -> RuleResult:
    if powers.get(PI, 0) and powers.get(DELTA, 0):
        return 0, {}
    return None


def _sigma_delta(powers: Powers) -> RuleResult:
    if not (powers.get(SIGMA, 0) and powers.get(DELTA, 0)):
        return None
    result = dict(powers)
    result[SIGMA] -= 1
    result[PSI] = result.get(PSI, 0) + 1
    return 1, result


# Relations of the quotient ring, one rewriting step each
RELATIONS: Dict[str, Callable[[Powers], RuleResult]] = {
    'pi_square': _pi_square,
    'sigma_pi': _sigma_pi,
    'pi_delta': _pi_delta,
    'sigma_delta': _sigma_delta,
}


@dataclass(frozen=True)
class XClass:
    """Class on the universal curve in the form P1(Ψ)Π + P2(Ψ,Σ) + P3(Ψ,N,Δ)Δ."""

    value: Polynomial

    @property
    def p1(self) -> Polynomial:
        """Coefficient of Π."""
        return self._part(lambda powers: powers.get(PI, 0) > 0, PI)

    @property
    def p2(self) -> Polynomial:
        return self._part(lambda powers: not powers.get(PI, 0) and not powers.get(DELTA, 0))

    @property
    def p3(self) -> Polynomial:
        """Coefficient of Δ."""
        return self._part(lambda powers: powers.get(DELTA, 0) > 0, DELTA)

    def _part(self, keep: Callable[[Powers], bool], divide: Optional[str] = None) -> Polynomial:
        selected = Polynomial({mono: coef for mono, coef in self.value.items() if keep(dict(mono))})
        return selected.divide_by_variable(divide) if divide else selected

    def __mul__(self, other: 'XClass') -> 'XClass':
        return reduce(self.value * other.value)

    def __add__(self, other: 'XClass') -> 'XClass':
        return XClass(self.value + other.value)

    def __str__(self):
        return self.value.to_text()


def _normalize(
    powers: Powers, relations: Iterable[str], rng: Optional[random.Random]
) -> Tuple[int, Powers]:
    rules = [RELATIONS[name] for name in relations]
    sign = 1
    while True:
        applicable = [result for result in (rule(powers) for rule in rules) if result is not None]
        if not applicable:
            return sign, powers
        factor, powers = rng.choice(applicable) if rng else applicable[0]
        if factor == 0:
            return 0, {}
        sign *= factor


def reduce(
    expr: Union[Polynomial, XClass],
    relations: Optional[Iterable[str]] = None,
    rng: Optional[random.Random] = None,
) -> XClass:
    """Canonical form of a class on the universal curve.

    c1(ω) is replaced by Σ-Ψ-2Π first; the quotient-ring relations are then applied
    until none matches.

    Args:
        expr: Polynomial in Σ, Ψ, Π, Δ, N and ω
        relations: Names of the relations to apply, all of RELATIONS by default
        rng: Pick applicable relations at random instead of in a fixed order

    Returns:
        Canonical XClass

    Raises:
        MalformedClass: If N survives in a monomial without Δ
    """
    if isinstance(expr, XClass):
        expr = expr.value
    relations = list(RELATIONS) if relations is None else list(relations)
    expr = expr.substitute({OMEGA: var(SIGMA) - var(PSI) - 2 * var(PI)})

    terms: Dict[tuple, Fraction] = {}
    for mono, coef in expr.items():
        sign, powers = _normalize(dict(mono), relations, rng)
        if not sign:
            continue
        if powers.get(NORMAL, 0) and not powers.get(DELTA, 0):
            raise MalformedClass(f'N without Δ in {Polynomial({mono: coef})}')
        key = make_monomial(powers)
        terms[key] = terms.get(key, Fraction(0)) + coef * sign
    return XClass(Polynomial(terms))


def geometric_series(x: Polynomial, order: int) -> Polynomial:
    """1 + x + x^2 + ... truncated at cohomological degree order."""
    result = Polynomial.const(1)
    power = Polynomial.const(1)
    for _ in range(order):
        power = (power * x).truncate_weight(order, X_WEIGHTS)
        result = result + power
    return result


def total_chern_f(order: int) -> XClass:
    """Total relative Chern class (1+Ψ)(1/(1-Σ+Ψ) - Δ/(1+N+Δ)) up to the given degree."""
    if order < 1:
        raise ValueError(f'order must be positive, got {order}')
    sigma, psi_x, nodes, normal = var(SIGMA), var(PSI), var(DELTA), var(NORMAL)
    smooth = geometric_series(sigma - psi_x, order)
    singular = nodes * geometric_series(-(normal + nodes), order)
    singular = singular.truncate_weight(order, X_WEIGHTS)
    total = ((1 + psi_x) * (smooth - singular)).truncate_weight(order, X_WEIGHTS)
    return reduce(total)


def chern_from_pullbacks(order: int, relations: Optional[Iterable[str]] = None) -> XClass:
    """c(p)/f^*c(q) with c(q) = 1/(1+Ψ+2Π) and c(p) = (1 - Δ/(1+N+Δ))/(1 - c1(ω))."""
    omega = var(SIGMA) - var(PSI) - 2 * var(PI)
    nodes, normal = var(DELTA), var(NORMAL)
    relative = geometric_series(omega, order)
    node_part = 1 - (nodes * geometric_series(-(normal + nodes), order))
    total = (1 + var(PSI) + 2 * var(PI)) * relative
    total = total.truncate_weight(order, X_WEIGHTS) * node_part
    total = total.truncate_weight(order, X_WEIGHTS)
    return reduce(total, relations)


@dataclass(frozen=True)
class ChernComparison:
    order: int
    direct: XClass
    via_pullbacks: XClass

    @property
    def agrees(self) -> bool:
        return self.direct == self.via_pullbacks


def compare_relative_chern(
    order: int, relations: Optional[Iterable[str]] = None
) -> ChernComparison:
    return ChernComparison(order, total_chern_f(order), chern_from_pullbacks(order, relations))


def verify_relative_chern(order: int, relations: Optional[Iterable[str]] = None) -> bool:
    """True iff both computations of c(f) agree in the quotient ring up to the order."""
    result = compare_relative_chern(order, relations).agrees
    logger.info(f'Relative Chern class check at order {order}: {result}')
    return result


def _as_polynomial(value: Union[int, str, Polynomial]) -> Polynomial:
    return var(value) if isinstance(value, str) else Polynomial.lift(value)


def xi0_value(n: Union[int, str, Polynomial] = N_SYMBOL, g: Union[int, str, Polynomial] = G_SYMBOL):
    """ξ_0 = 2n - 2 + 2g."""
    return 2 * _as_polynomial(n) - 2 + 2 * _as_polynomial(g)


def p_push(
    x: Union[Polynomial, XClass],
    n: Union[int, str, Polynomial] = N_SYMBOL,
    g: Optional[Union[int, str, Polynomial]] = None,
) -> Polynomial:
    """Pushforward along p by the rules Σ^(k+1) -> ξ_k, N^k Δ^(l+1) -> δ_{k,l}, Π -> n.

    Powers of Ψ pass through as powers of ψ; classes without Σ, Π or Δ push to zero.

    When g is given, ξ_0 is replaced by 2n-2+2g.

    Raises:
        MalformedClass: If a monomial is not in canonical form
    """
    cls = x if isinstance(x, XClass) else reduce(x)
    n_value = _as_polynomial(n)

    def push(mono, coef):
        powers = dict(mono)
        psi_exp = powers.pop(PSI, 0)
        base = psi() ** psi_exp * coef
        if not powers:
            return Polynomial()
        if powers == {PI: 1}:
            return base * n_value
        if set(powers) == {SIGMA}:
            return base * xi(powers[SIGMA] - 1)
        if set(powers) <= {NORMAL, DELTA} and powers.get(DELTA, 0):
            return base * delta(powers.get(NORMAL, 0), powers[DELTA] - 1)
        raise MalformedClass(f'Cannot push forward {Polynomial({mono: coef})}')

    result = cls.value.map_terms(push)
    if g is not None:
        result = result.substitute({xi_name(0): xi0_value(n, g)})
    return result


@dataclass(frozen=True)
class YProduct:
    """Coefficient times Ψ_Y^psi_exp Π_Y^pi_exp times the product of f_*(factor)."""

    factors: Tuple[Polynomial, ...]
    psi_exp: int = 0
    pi_exp: int = 0
    coefficient: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, 'factors', tuple(self.factors))
        if self.pi_exp >= 2:
            # Π_Y^2 = -Ψ_Y Π_Y
            extra = self.pi_exp - 1
            object.__setattr__(self, 'coefficient', self.coefficient * (-1) ** extra)
            object.__setattr__(self, 'psi_exp', self.psi_exp + extra)
            object.__setattr__(self, 'pi_exp', 1)


def q_push_product(product: YProduct) -> Polynomial:
    """Pushforward along q of Ψ_Y^e Π_Y^c f_*(h_1)...f_*(h_s).

    Equals ψ^(s-1+e) p_*(h_1)...p_*(h_s) when c = 0 and every h_i is annihilated by Π.

    Raises:
        PoleObstruction: If some factor h_i has h_i Π != 0
    """
    factors = [reduce(h) for h in product.factors]
    for factor in factors:
        if reduce(factor.value * var(PI)).value:
            raise PoleObstruction(f'f_*({factor}) is not annihilated by Π')

    scale = psi() ** product.psi_exp * product.coefficient
    if not factors:
        return scale if product.pi_exp == 1 else Polynomial()
    if product.pi_exp:
        return Polynomial()

    result = scale * psi() ** (len(factors) - 1)
    for factor in factors:
        result = result * p_push(factor)
    return result


def genus0_reduce(b: Polynomial, n: Union[int, str, Polynomial] = N_SYMBOL) -> Polynomial:
    """Eliminate g, ξ_0 and ξ_1 with ξ_0 = 2n-2 and ξ_1 = 4(n-1)ψ - δ_{0,0}."""
    n_value = _as_polynomial(n)
    return b.substitute({
        G_SYMBOL: 0,
        xi_name(0): 2 * n_value - 2,
        xi_name(1): 4 * (n_value - 1) * psi() - delta(0, 0),
    })


def hodge_ch(level: int, g: Optional[Union[int, str, Polynomial]] = G_SYMBOL) -> Polynomial:
    """Component ch_level of the Hodge bundle as the pushforward of the GRR level level+1.

    With g given, ξ_0 is replaced by 2n-2+2g.
    """
    if level < 0:
        raise ValueError(f'level must be nonnegative, got {level}')
    for term in grr_rhs(level + 1):
        if term.level == level + 1:
            return p_push(reduce(term.cls), g=g) * term.coefficient
    return Polynomial()


def genus0_identities(max_level: int = 5) -> List[Polynomial]:
    """Vanishing relations p_*(class) = 0 from ch_level(Λ) = 0 at g = 0, for odd levels."""
    identities = []
    for term in grr_rhs(max_level + 1):
        if term.level >= 2 and term.level % 2 == 0:
            identities.append(p_push(reduce(term.cls), g=0))
    return identities


# Accepted spellings of the basic classes in user input
X_NAMES = {
    'Σ': SIGMA, 'Sigma': SIGMA, 'S': SIGMA,
    'Ψ': PSI, 'Psi': PSI,
    'Π': PI, 'Pi': PI,
    'Δ': DELTA, 'Delta': DELTA, 'D': DELTA,
    'N': NORMAL,
    'ω': OMEGA, 'omega': OMEGA, 'w': OMEGA,
}


def parse_x_expression(text: str) -> Polynomial:
    """Parse user input such as '(Σ-Ψ-2Π)^2 + Δ' into a polynomial on the universal curve.

    Raises:
        ExpressionSyntaxError: If the text is not a polynomial in the known classes
    """
    local_dict = {name: sympy.Symbol(target) for name, target in X_NAMES.items()}
    transformations = standard_transformations + (convert_xor, implicit_multiplication)
    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=transformations)
    except (SyntaxError, TypeError) as e:
        raise ExpressionSyntaxError(f'Cannot parse {text!r}: {str(e)}') from e

    allowed = set(X_NAMES.values())
    unknown = sorted(symbol.name for symbol in expr.free_symbols if symbol.name not in allowed)
    if unknown:
        raise ExpressionSyntaxError(f'Unknown classes in {text!r}: {", ".join(unknown)}')
    return Polynomial.from_sympy(expr)


def relative_chern_degree(n: int, g_source: int, g_target: int = 0) -> int:
    """Degree of c1 of the relative tangent bundle of a degree-n map, n(2-2g_N) - (2-2g_M)."""
    return n * (2 - 2 * g_target) - (2 - 2 * g_source)
