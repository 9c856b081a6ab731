""" log.py

    Logging is really important for long numerical runs that nobody watches
    on the console. This file contains methods for easily handling log
    outputs in the console, and in files.

    Files are preferred over console output, since you'll be able to
    retrieve information (conditioning warnings, truncation bounds, Monte
    Carlo budgets) from older runs.
"""

import logging
import sys

from datetime import datetime
from os import path, makedirs
from typing import Optional

from .consts import ROOT_DIR, LOGGER_NAME

FORMAT = '%(asctime)s:%(levelname)s:%(name)s:%(module)s: %(message)s'


def open_log_file(log_dir: Optional[str] = None):
    now = int(round(datetime.now().timestamp()))
    logs_dir_path = log_dir if log_dir else path.join(ROOT_DIR, '.logs')
    if not path.isabs(logs_dir_path):
        logs_dir_path = path.join(ROOT_DIR, logs_dir_path)
    if not path.exists(logs_dir_path):
        makedirs(logs_dir_path)
    return open(path.join(logs_dir_path, f'{now}.log'), 'a+')


def create_default_logger(is_debug: bool = False, log_dir: Optional[str] = None):
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(logging.DEBUG if is_debug else logging.INFO)

    # one handler per process, repeated CLI invocations reuse it
    if logger.handlers:
        return logger

    handler = logging.StreamHandler(sys.stdout if is_debug else open_log_file(log_dir))
    formatter = logging.Formatter(FORMAT)

    handler.setFormatter(formatter)
    logger.addHandler(handler)

    return logger


def get_logger(module: Optional[str] = None) -> logging.Logger:
    """ Child of the package logger, used by module-level operations """
    return logging.getLogger(f'{LOGGER_NAME}.{module}' if module else LOGGER_NAME)
