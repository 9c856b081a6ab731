""" tables.py

    CSV tables with a one-line JSON header. The header is written as a
    '#' comment, followed by a '#' comment naming the columns. Floats are
    written with repr, so reading a table back reproduces every value
    bit for bit.
"""

import csv
import json

from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from ..errors import MalformedInput

COMMENT = '# '


def _plain(value: Any) -> Any:
    """ numpy scalars in a header become their Python counterparts """
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f'{type(value).__name__} is not JSON serializable')


def _cell(value: Any) -> str:
    return repr(float(value)) if isinstance(value, (int, float)) and not isinstance(value, bool) else str(value)


def write_table(filename: str, header: Dict[str, Any], columns: Sequence[str], rows) -> str:
    with open(filename, 'w', newline='') as f:
        f.write(COMMENT + json.dumps(header, sort_keys=True, default=_plain) + '\n')
        f.write(COMMENT + ','.join(columns) + '\n')
        writer = csv.writer(f)
        for row in rows:
            writer.writerow([_cell(value) for value in row])
    return filename


def read_table(filename: str) -> Tuple[Dict[str, Any], List[str], List[List[str]]]:
    """ Header, column names and raw string rows """
    try:
        with open(filename, 'r', newline='') as f:
            header_line = f.readline()
            columns_line = f.readline()
            rows = [row for row in csv.reader(f) if row]
    except FileNotFoundError as e:
        raise MalformedInput(f'table {filename} does not exist') from e

    if not header_line.startswith(COMMENT) or not columns_line.startswith(COMMENT):
        raise MalformedInput(f'{filename} is missing its JSON header')
    try:
        header = json.loads(header_line[len(COMMENT):])
    except json.JSONDecodeError as e:
        raise MalformedInput(f'{filename} has a malformed JSON header: {e}') from e

    columns = columns_line[len(COMMENT):].strip().split(',')
    if any(len(row) != len(columns) for row in rows):
        raise MalformedInput(f'{filename}: every row needs {len(columns)} fields')
    return header, columns, rows


def float_column(rows: List[List[str]], index: int, filename: str = 'table') -> List[float]:
    try:
        return [float(row[index]) for row in rows]
    except ValueError as e:
        raise MalformedInput(f'{filename}: non-numeric value in column {index}') from e
