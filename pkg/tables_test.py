"""Tests for the DataFrame tables and their export."""

from hurwitz_strata.partitions import MultiPartition
from hurwitz_strata.report import Report, ReportItem
from hurwitz_strata.tables import basic_degrees_frame, report_frame, save_dataframe, strata_frame


def test_basic_degrees_frame():
    df = basic_degrees_frame([4, 5])
    assert list(df['n']) == [4, 5]
    assert df.loc[df['n'] == 5, 'deg1'].iloc[0] == '25'


def test_strata_frame():
    df = strata_frame([MultiPartition.parse('2^1')], [3, 4])
    assert list(df.columns) == ['label', 'n', 'degree', 'hurwitz']
    assert list(df['hurwitz']) == ['1', '27']


def test_strata_frame_with_oracle():
    df = strata_frame([MultiPartition.parse('1^2')], [4], with_oracle=True)
    assert df['oracle'].iloc[0] == df['hurwitz'].iloc[0] == '12'


def test_report_frame():
    df = report_frame(Report([ReportItem.compare('one', 1, 2)]))
    assert list(df.columns) == ['name', 'expected', 'computed', 'status']
    assert df['status'].iloc[0] == 'FAIL'


def test_save_dataframe(tmp_path):
    paths = save_dataframe(basic_degrees_frame([4]), tmp_path / 'out', 'basic')
    assert [path.name for path in paths] == ['basic.csv', 'basic.xlsx']
    assert all(path.exists() for path in paths)
    assert 'deg1' in paths[0].read_text(encoding='utf-8')
