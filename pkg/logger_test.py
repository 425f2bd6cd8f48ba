"""Tests for the logging setup."""

import logging

from hurwitz_strata.logger import ROOT_NAME, attach_log_file, console_level_from_env, get_logger


def test_module_loggers_share_the_package_logger():
    logger = get_logger('hurwitz_strata.algebra')
    assert logger.name == 'hurwitz_strata.algebra'
    assert logger.parent.name == ROOT_NAME
    assert get_logger('__main__').name == f'{ROOT_NAME}.cli'


def test_console_level_from_env(monkeypatch):
    monkeypatch.setenv('STRATA_LOG_LEVEL', 'debug')
    assert console_level_from_env() == logging.DEBUG
    monkeypatch.setenv('STRATA_LOG_LEVEL', 'nonsense')
    assert console_level_from_env() == logging.WARNING


def test_log_file_collects_module_records(tmp_path):
    log_file = attach_log_file(tmp_path)
    assert attach_log_file(tmp_path) == log_file
    get_logger('hurwitz_strata.oracle').debug('class algebra ready')
    for handler in logging.getLogger(ROOT_NAME).handlers:
        handler.flush()
    assert 'class algebra ready' in log_file.read_text(encoding='utf-8')
