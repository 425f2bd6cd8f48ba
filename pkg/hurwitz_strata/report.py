"""Module for check reports and text, JSON and LaTeX rendering of results."""

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Tuple, Union

import sympy

from hurwitz_strata.algebra import Polynomial, format_rational
from hurwitz_strata.logger import get_logger
from hurwitz_strata.ring import G_SYMBOL, N_SYMBOL, PSI_B

# Setup logger
logger = get_logger(__name__)

FORMATS = ('text', 'json', 'latex')

# LaTeX names of the classes on the universal curve
LATEX_SYMBOLS = {
    'Σ': r'\Sigma',
    'Ψ': r'\Psi',
    'Π': r'\Pi',
    'Δ': r'\Delta',
    'N': 'N',
    'ω': r'\omega',
    PSI_B: r'\psi',
}

XI_PATTERN = re.compile(r'^ξ(\d+)$')
DELTA_PATTERN = re.compile(r'^δ(\d+),(\d+)$')


class Status(Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'


@dataclass(frozen=True)
class ReportItem:
    """One named comparison of an expected and a computed value."""

    name: str
    expected: str
    computed: str
    status: Status

    @classmethod
    def compare(cls, name: str, expected: Any, computed: Any) -> 'ReportItem':
        status = Status.PASS if expected == computed else Status.FAIL
        return cls(name, render_value(expected), render_value(computed), status)

    @classmethod
    def failure(cls, name: str, expected: Any, error: Exception) -> 'ReportItem':
        return cls(name, render_value(expected), f'{type(error).__name__}: {error}', Status.FAIL)

    def to_dict(self) -> Dict[str, str]:
        return {
            'name': self.name,
            'expected': self.expected,
            'computed': self.computed,
            'status': self.status.value,
        }


@dataclass
class Report:
    items: List[ReportItem] = field(default_factory=list)

    @property
    def overall(self) -> Status:
        passed = all(item.status is Status.PASS for item in self.items)
        return Status.PASS if passed else Status.FAIL

    @property
    def failures(self) -> List[ReportItem]:
        return [item for item in self.items if item.status is Status.FAIL]

    def add(self, item: ReportItem) -> None:
        self.items.append(item)

    def extend(self, items: List[ReportItem]) -> None:
        self.items.extend(items)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'overall': self.overall.value,
            'items': [item.to_dict() for item in self.items],
        }

    def to_text(self) -> str:
        lines = [f'{self.overall.value} ({len(self.items)} items)']
        for item in self.items:
            line = f'{item.status.value}  {item.name}'
            if item.status is Status.FAIL:
                line += f'\n      expected: {item.expected}\n      computed: {item.computed}'
            lines.append(line)
        return '\n'.join(lines)


def render_value(value: Any) -> str:
    """Canonical text of a number, polynomial or other value."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, Fraction)):
        return format_rational(Fraction(value))
    if isinstance(value, Polynomial):
        return value.to_text()
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(render_value(item) for item in value) + ']'
    return str(value)


def _latex_name(name: str) -> str:
    match = XI_PATTERN.match(name)
    if match:
        return rf'\xi_{{{match.group(1)}}}'
    match = DELTA_PATTERN.match(name)
    if match:
        return rf'\delta_{{{match.group(1)},{match.group(2)}}}'
    return LATEX_SYMBOLS.get(name, name)


def _latex_monomial(mono) -> str:
    powers = dict(mono)
    names = sorted(name for name in powers if name != PSI_B)
    if PSI_B in powers:
        names.append(PSI_B)
    pieces = []
    for name in names:
        exp = powers[name]
        body = _latex_name(name)
        pieces.append(body if exp == 1 else f'{body}^{{{exp}}}')
    return ''.join(pieces)


def _latex_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return rf'\frac{{{value.numerator}}}{{{value.denominator}}}'


def _latex_coefficient(coefficient: Polynomial) -> Tuple[str, bool]:
    """Factored LaTeX of a coefficient polynomial in n and g, and whether it is negative."""
    constant, factors = sympy.factor_list(coefficient.to_sympy())
    constant = Fraction(int(sympy.Rational(constant).p), int(sympy.Rational(constant).q))
    negative = constant < 0
    ordered = sorted(factors, key=lambda item: (sympy.Poly(item[0]).total_degree(), str(item[0])))
    body = ''
    for factor, exp in ordered:
        text = sympy.latex(factor).replace(' ', '')
        body += f'({text})' if exp == 1 else f'({text})^{{{exp}}}'
    magnitude = abs(constant)
    if magnitude != 1 or not body:
        body = _latex_rational(magnitude) + body
    return body, negative


def class_latex(poly: Polynomial) -> str:
    """LaTeX of a class with coefficients factored over n and g.

    Terms are ordered by decreasing power of ψ.
    """
    if not poly:
        return '0'
    basic = [name for name in poly.variables() if name not in (N_SYMBOL, G_SYMBOL)]
    groups = poly.collect(basic)

    def order(mono):
        powers = dict(mono)
        return (-powers.get(PSI_B, 0), -sum(powers.values()), _latex_monomial(mono))

    pieces = []
    for index, mono in enumerate(sorted(groups, key=order)):
        coefficient, negative = _latex_coefficient(groups[mono])
        monomial = _latex_monomial(mono)
        if monomial and coefficient == '1':
            coefficient = ''
        term = coefficient + monomial
        if index == 0:
            pieces.append(f'-{term}' if negative else term)
        else:
            pieces.append(f'-{term}' if negative else f'+{term}')
    return ''.join(pieces)


JsonValue = Union[Dict[str, Any], List[Any], str]


def to_jsonable(value: Any) -> JsonValue:
    """Convert results into JSON-ready data with exact 'p/q' numbers."""
    if isinstance(value, Report):
        return value.to_dict()
    if isinstance(value, Polynomial):
        return value.to_json()
    if isinstance(value, Mapping):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    return render_value(value)


def to_latex(value: Any) -> str:
    if isinstance(value, Polynomial):
        return class_latex(value)
    if isinstance(value, Fraction) and value.denominator != 1:
        return _latex_rational(value)
    if isinstance(value, Mapping):
        rows = [f'{key} &= {to_latex(item)}' for key, item in value.items()]
        return '\\\\\n'.join(rows)
    if isinstance(value, list):
        return '\\\\\n'.join(to_latex(item) for item in value)
    if isinstance(value, Report):
        rows = [f'\\text{{{item.name}}} & \\text{{{item.status.value}}}' for item in value.items]
        return '\\\\\n'.join([f'\\text{{{value.overall.value}}}'] + rows)
    return render_value(value)


def to_text(value: Any) -> str:
    if isinstance(value, Report):
        return value.to_text()
    if isinstance(value, list):
        return '\n\n'.join(to_text(item) for item in value)
    if isinstance(value, Mapping):
        return '\n'.join(f'{key}: {to_text(item)}' for key, item in value.items())
    return render_value(value)


def emit(value: Any, fmt: str = 'text') -> bytes:
    """Render a report, class or value in the given format as UTF-8 bytes.

    Raises:
        ValueError: For unknown formats
    """
    if fmt == 'text':
        rendered = to_text(value)
    elif fmt == 'json':
        rendered = json.dumps(to_jsonable(value), ensure_ascii=False, indent=2)
    elif fmt == 'latex':
        rendered = to_latex(value)
    else:
        raise ValueError(f'Unknown format {fmt!r}, expected one of {", ".join(FORMATS)}')
    return (rendered + '\n').encode('utf-8')
