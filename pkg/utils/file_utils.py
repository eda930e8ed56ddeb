# Numeric series ingestion shared by the CLI and the local agent

import logging
import os
import re
import sys

import numpy as np

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.errors import SeriesFormatError

logger = logging.getLogger(__name__)

_SEPARATORS = re.compile(r"[\s,]+")


def _to_float(token, line_no):
    try:
        value = float(token)
    except ValueError:
        raise SeriesFormatError(f"Line {line_no}: {token!r} is not a number", token=token)
    if not np.isfinite(value):
        raise SeriesFormatError(f"Line {line_no}: {token!r} is not a finite number", token=token)
    return value


def parse_series_text(text, column=None):
    """
    Read a numeric series from text.

    Without a column every whitespace- or comma-separated token is one value.
    With `column` (1-based) each non-empty line is a CSV row and only that field is read.
    Blank lines and lines starting with '#' are skipped.
    """
    if column is not None and column < 1:
        raise SeriesFormatError(f"Column numbers start at 1, got {column}", token=str(column))

    values = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if column is None:
            values.extend(_to_float(tok, line_no) for tok in _SEPARATORS.split(stripped) if tok)
            continue
        fields = [f.strip() for f in stripped.split(",")]
        if column > len(fields):
            raise SeriesFormatError(f"Line {line_no}: no column {column} (found {len(fields)})",
                                    token=stripped)
        values.append(_to_float(fields[column - 1], line_no))

    return np.array(values, dtype=float)


def read_series(file_path, column=None):
    """Load a series file (UTF-8) into a float array"""
    with open(file_path, "r", encoding="utf-8") as f:
        series = parse_series_text(f.read(), column)
    logger.info(f"[SERIES] Read {len(series)} values from {file_path}")
    return series
