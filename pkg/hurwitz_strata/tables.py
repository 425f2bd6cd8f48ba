"""Module for tabulating degrees, Hurwitz numbers and check reports with pandas DataFrames."""

import sys
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional

import pandas as pd

from hurwitz_strata.algebra import format_rational
from hurwitz_strata.degrees import basic_degree_table, degree, hurwitz_from_degree
from hurwitz_strata.errors import NegativeSimplePoints, ResourceBound, TooLarge
from hurwitz_strata.logger import get_logger
from hurwitz_strata.oracle import hurwitz_oracle
from hurwitz_strata.partitions import MultiPartition
from hurwitz_strata.report import Report
from hurwitz_strata.strata import sigma_g0

# Setup logger
logger = get_logger(__name__)


def basic_degrees_frame(values: Iterable[int]) -> pd.DataFrame:
    """One row per n with the degrees of 1, δ_{0,0}, ξ_2, δ_{1,0} and δ_{0,0}^2."""
    rows = []
    for value in values:
        row = {'n': value}
        row.update({name: format_rational(deg) for name, deg in basic_degree_table(value).items()})
        rows.append(row)
    return pd.DataFrame(rows)


def _oracle_text(label: MultiPartition, value: int) -> Optional[str]:
    try:
        return format_rational(hurwitz_oracle(label, value))
    except TooLarge:
        return '0'
    except ResourceBound:
        return None


def strata_frame(
    labels: Iterable[MultiPartition], values: Iterable[int], with_oracle: bool = False
) -> pd.DataFrame:
    """Degree and Hurwitz number of every stratum for every n.

    Args:
        labels: Stratum labels
        values: Degrees n of the covers
        with_oracle: Add a column with the symmetric-group count, empty above the oracle bound

    Returns:
        DataFrame with columns label, n, degree, hurwitz and optionally oracle
    """
    values = list(values)
    rows = []
    for label in labels:
        cls = sigma_g0(label)
        for value in values:
            try:
                deg = degree(cls, value)
                hurwitz = hurwitz_from_degree(label, value, deg)
            except NegativeSimplePoints:
                logger.debug(f'Skipping {label} at n={value}: no simple critical values left')
                continue
            row = {
                'label': str(label),
                'n': value,
                'degree': format_rational(deg),
                'hurwitz': format_rational(hurwitz),
            }
            if with_oracle:
                row['oracle'] = _oracle_text(label, value)
            rows.append(row)
    logger.info(f'Tabulated {len(rows)} stratum rows')
    return pd.DataFrame(rows)


def report_frame(report: Report) -> pd.DataFrame:
    return pd.DataFrame(
        [item.to_dict() for item in report.items],
        columns=['name', 'expected', 'computed', 'status'],
    )


def _writers(df: pd.DataFrame) -> Dict[str, Callable[[Path], None]]:
    return {
        'csv': lambda path: df.to_csv(path, index=False),
        'xlsx': lambda path: df.to_excel(path, index=False, sheet_name='hurwitz_strata'),
    }


def save_dataframe(df: pd.DataFrame, output_dir: Path, filename: str) -> List[Path]:
    """Write a table as CSV and as an Excel sheet.

    Args:
        df: Table to write
        output_dir: Target directory, created if missing
        filename: File stem shared by both files

    Returns:
        Paths of the written files; empty when writing failed
    """
    logger.info(f'Writing {len(df)} rows as {filename}')
    written = []
    try:
        output_dir.mkdir(parents=True, exist_ok=True)
        for suffix, write in _writers(df).items():
            path = output_dir / f'{filename}.{suffix}'
            write(path)
            size = path.stat().st_size / 1024  # KB
            logger.debug(f'Wrote {path} ({size:.2f} KB)')
            print(f'Saved {path}', file=sys.stderr)
            written.append(path)
    except (OSError, ValueError, ImportError) as e:
        logger.exception(f'Could not write {filename} to {output_dir}: {str(e)}')
        print(f'error: could not write {filename}: {str(e)}', file=sys.stderr)
        return []
    return written
