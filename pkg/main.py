#!/usr/bin/env python3
"""Main script for singularity classes and strata degrees on Hurwitz spaces."""

import argparse
import os
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from dotenv import load_dotenv

from hurwitz_strata.algebra import format_rational
from hurwitz_strata.cache import RESIDUALS
from hurwitz_strata.checks import CHECKS, CheckOptions, run_checks
from hurwitz_strata.degrees import (
    basic_degree_table,
    degree,
    h_closed_form,
    hurwitz_from_degree,
)
from hurwitz_strata.errors import (
    ExpressionSyntaxError,
    PartitionSyntaxError,
    ResourceBound,
    StrataError,
    UnknownCheck,
    UnknownLabel,
)
from hurwitz_strata.grr import MAX_ORDER, grr_rhs
from hurwitz_strata.local_models import residual_multising
from hurwitz_strata.logger import get_logger
from hurwitz_strata.oracle import hurwitz_oracle
from hurwitz_strata.partitions import MultiPartition, ReducedPartition
from hurwitz_strata.report import FORMATS, Report, Status, emit
from hurwitz_strata.ring import p_push, parse_x_expression, reduce
from hurwitz_strata.strata import assemble, residual_multimulti, sigma_g0
from hurwitz_strata.tables import (
    basic_degrees_frame,
    report_frame,
    save_dataframe,
    strata_frame,
)

# Load environment variables
load_dotenv()

# Configuration
PROJECT_DIR = Path(__file__).parent
OUTPUT_DIR = Path(os.getenv('STRATA_OUTPUT_DIR', str(PROJECT_DIR / 'output')))
LOG_DIR = os.getenv('STRATA_LOG_DIR')

# Setup logger
logger = get_logger(__name__, Path(LOG_DIR) if LOG_DIR else None)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

Result = Tuple[Any, int]


class UsageError(Exception):
    """Missing or conflicting command-line options."""


def parse_n_range(text: str) -> List[int]:
    """Parse '5' or '4..8' into the list of degrees n.

    Raises:
        argparse.ArgumentTypeError: If the text is not a number or a nonempty range
    """
    try:
        if '..' in text:
            low, high = (int(part) for part in text.split('..', 1))
        else:
            low = high = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected n or a..b, got {text!r}') from None
    if low > high or low < 1:
        raise argparse.ArgumentTypeError(f'empty or invalid range {text!r}')
    return list(range(low, high + 1))


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--format', choices=FORMATS, default='text', help='Output format')
    parser.add_argument(
        '--output-dir',
        type=Path,
        nargs='?',
        const=OUTPUT_DIR,
        help=f'Also save tables as CSV and Excel (bare flag: {OUTPUT_DIR})',
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per task."""
    parser = argparse.ArgumentParser(
        description='Singularity classes and strata degrees on Hurwitz spaces'
    )
    commands = parser.add_subparsers(dest='command', required=True)

    residual = commands.add_parser('residual', help='Residual polynomial of a label')
    residual.add_argument('--label', help='Multisingularity over one value, e.g. "1^2,2^1"')
    residual.add_argument('--pair', help='Several critical values, e.g. "2^1;1^2"')

    ring = commands.add_parser('ring', help='Canonical forms and pushforwards')
    ring.add_argument('--reduce', dest='reduce_expr', help='Class on the universal curve')
    ring.add_argument('--push', dest='push_expr', help='Class to push forward along p')
    ring.add_argument('--genus', type=int, help='Substitute ξ_0 = 2n-2+2g when pushing')
    ring.add_argument('--check', choices=sorted(CHECKS), help='Run one named check')

    grr = commands.add_parser('grr', help='Relative GRR expansion')
    grr.add_argument('--order', type=int, default=MAX_ORDER, help='Deepest level')
    grr.add_argument('--check', choices=sorted(CHECKS), help='Run one named check')

    strata = commands.add_parser('strata', help='Class of a stratum')
    strata.add_argument('--label', required=True, help='Stratum label, e.g. "2^1;1^2"')
    strata.add_argument('--genus0', action='store_true', help='Print the genus-zero class')
    strata.add_argument('--n', type=parse_n_range, help='Also print degrees at n or a..b')

    degrees = commands.add_parser('degrees', help='Genus-zero degrees')
    degrees.add_argument('--all', action='store_true', help='All tabulated basic degrees')
    degrees.add_argument('--label', help='Degree of the class of this stratum')
    degrees.add_argument('--n', type=parse_n_range, required=True, help='n or a..b')

    hurwitz = commands.add_parser('hurwitz', help='Genus-zero Hurwitz numbers')
    hurwitz.add_argument('--label', required=True, help='Stratum label')
    hurwitz.add_argument('--n', type=parse_n_range, help='n or a..b')
    hurwitz.add_argument('--closed-form', action='store_true', help='Print the formula in n')
    hurwitz.add_argument('--oracle', action='store_true', help='Add oracle counts to tables')

    oracle = commands.add_parser('oracle', help='Hurwitz numbers by counting in S_n')
    oracle.add_argument('--label', required=True, help='Stratum label')
    oracle.add_argument('--n', type=parse_n_range, required=True, help='n or a..b')
    oracle.add_argument('--genus', type=int, default=0, help='Genus of the cover (default: 0)')
    oracle.add_argument('--override-resource-bound', action='store_true')

    verify = commands.add_parser('verify', help='Run the named checks')
    verify.add_argument('--all', action='store_true', help='Run every check (default)')
    verify.add_argument('--check', action='append', choices=sorted(CHECKS), help='Check name')
    verify.add_argument('--against-oracle', action='store_true', help='Add oracle-crosscheck')
    verify.add_argument('--max-n', type=int, default=6, help='Largest n for the oracle')
    verify.add_argument('--naive-max-n', type=int, default=5, help='Largest n for enumeration')
    verify.add_argument('--override-resource-bound', action='store_true')

    for sub in (residual, ring, grr, strata, degrees, hurwitz, oracle, verify):
        _add_common(sub)
    return parser


def _single_check(name: str) -> Result:
    report = run_checks([name])
    return report, _report_status(report)


def _report_status(report: Report) -> int:
    return EXIT_OK if report.overall is Status.PASS else EXIT_FAIL


def _save(df, args: argparse.Namespace, filename: str) -> None:
    if args.output_dir:
        save_dataframe(df, args.output_dir, filename)


def run_residual(args: argparse.Namespace) -> Result:
    text = args.pair or args.label
    if not text:
        raise UsageError('residual needs --label or --pair')
    if ';' not in text:
        return residual_multising(ReducedPartition.parse(text)).value, EXIT_OK

    residual = residual_multimulti(MultiPartition.parse(text))
    if args.format != 'json':
        return residual.value, EXIT_OK
    return {
        'label': str(residual.label),
        'residual': residual.value,
        'collisions': [str(term) for term in residual.collisions],
    }, EXIT_OK


def run_ring(args: argparse.Namespace) -> Result:
    if args.check:
        return _single_check(args.check)
    if args.reduce_expr:
        return reduce(parse_x_expression(args.reduce_expr)).value, EXIT_OK
    if args.push_expr:
        return p_push(reduce(parse_x_expression(args.push_expr)), g=args.genus), EXIT_OK
    raise UsageError('ring needs --reduce, --push or --check')


def run_grr(args: argparse.Namespace) -> Result:
    if args.check:
        return _single_check(args.check)
    terms = grr_rhs(args.order)
    if args.format == 'json':
        return [
            {'level': term.level, 'coefficient': term.coefficient, 'class': term.cls}
            for term in terms
        ], EXIT_OK
    return {
        f'level {term.level}': f'{format_rational(term.coefficient)} * ({term.cls.to_text()})'
        for term in terms
    }, EXIT_OK


def stratum_row(label: MultiPartition, value: int) -> Dict[str, Any]:
    """JSON row {label, class, degree, hurwitz} of a genus-zero stratum at n = value."""
    cls = sigma_g0(label)
    deg = degree(cls, value)
    return {
        'label': str(label),
        'class': cls,
        'degree': deg,
        'hurwitz': hurwitz_from_degree(label, value, deg),
    }


def _rows_or_row(rows: List[Dict[str, Any]]) -> Any:
    return rows[0] if len(rows) == 1 else rows


def run_strata(args: argparse.Namespace) -> Result:
    label = MultiPartition.parse(args.label)
    expression = assemble(label)
    if args.n:
        _save(strata_frame([label], args.n), args, f'strata_{label}')
        return _rows_or_row([stratum_row(label, value) for value in args.n]), EXIT_OK
    cls = expression.genus0 if args.genus0 else expression.general_g
    if args.format == 'json':
        return {'label': str(label), 'class': cls}, EXIT_OK
    return cls, EXIT_OK


def _by_n(values: Sequence[int], compute: Callable[[int], Any]) -> Any:
    if len(values) == 1:
        return compute(values[0])
    return {str(value): compute(value) for value in values}


def run_degrees(args: argparse.Namespace) -> Result:
    if args.label:
        cls = sigma_g0(MultiPartition.parse(args.label))
        return _by_n(args.n, lambda value: degree(cls, value)), EXIT_OK
    if not args.all:
        raise UsageError('degrees needs --all or --label')
    _save(basic_degrees_frame(args.n), args, 'basic_degrees')
    return _by_n(args.n, basic_degree_table), EXIT_OK


def run_hurwitz(args: argparse.Namespace) -> Result:
    label = MultiPartition.parse(args.label)
    if args.closed_form:
        return str(h_closed_form(label)), EXIT_OK
    if not args.n:
        raise UsageError('hurwitz needs --n or --closed-form')
    _save(strata_frame([label], args.n, with_oracle=args.oracle), args, f'hurwitz_{label}')
    rows = [stratum_row(label, value) for value in args.n]
    if args.format == 'json':
        return _rows_or_row(rows), EXIT_OK
    if len(rows) == 1:
        return rows[0]['hurwitz'], EXIT_OK
    return {str(value): row['hurwitz'] for value, row in zip(args.n, rows)}, EXIT_OK


def run_oracle(args: argparse.Namespace) -> Result:
    label = MultiPartition.parse(args.label)
    bound = args.override_resource_bound
    return _by_n(
        args.n, lambda value: hurwitz_oracle(label, value, args.genus, bound)
    ), EXIT_OK


def run_verify(args: argparse.Namespace) -> Result:
    names: Optional[List[str]] = None
    if not args.all and (args.check or args.against_oracle):
        names = list(args.check or [])
        if args.against_oracle and 'oracle-crosscheck' not in names:
            names.append('oracle-crosscheck')
    options = CheckOptions(
        max_n=args.max_n,
        naive_max_n=args.naive_max_n,
        override_bound=args.override_resource_bound,
    )
    report = run_checks(names, options)
    _save(report_frame(report), args, 'verify_report')
    return report, _report_status(report)


COMMANDS: Dict[str, Callable[[argparse.Namespace], Result]] = {
    'residual': run_residual,
    'ring': run_ring,
    'grr': run_grr,
    'strata': run_strata,
    'degrees': run_degrees,
    'hurwitz': run_hurwitz,
    'oracle': run_oracle,
    'verify': run_verify,
}


# Errors caused by what the user typed rather than by the computation
USAGE_ERRORS = (
    UsageError,
    PartitionSyntaxError,
    ExpressionSyntaxError,
    UnknownLabel,
    UnknownCheck,
    ResourceBound,
)


def _usage_error(message: str) -> int:
    print(f'error: {message}', file=sys.stderr)
    return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and write its result to stdout.

    Returns:
        0 on success or PASS, 1 on FAIL or a computation error, 2 on usage errors
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    logger.info(f'Running {args.command}')
    try:
        value, status = COMMANDS[args.command](args)
        sys.stdout.write(emit(value, args.format).decode('utf-8'))
    except USAGE_ERRORS as e:
        return _usage_error(e.args[0] if e.args else str(e))
    except (StrataError, ArithmeticError, ValueError) as e:
        logger.exception(f'Error in {args.command}: {str(e)}')
        print(f'error: {e}', file=sys.stderr)
        return EXIT_FAIL
    finally:
        RESIDUALS.persist()

    return status


if __name__ == '__main__':
    sys.exit(main())
