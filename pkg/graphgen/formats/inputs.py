"""
Readers for model inputs: probability matrices and degree sequences.
"""

import re
from pathlib import Path

import numpy as np

from graphgen.errors import DomainError, GraphIOError, ParseError
from graphgen.samplers.block_models import DegreeSequence

_SEPARATORS = re.compile(r"[,\s]+")


def read_text(path: str | Path) -> str:
    """
    Read a UTF-8 input file.

    Raises:
        GraphIOError: If the file cannot be read
    """
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GraphIOError(f"Cannot read {path}: {e}") from e


def _is_skipped(line: str) -> bool:
    stripped = line.strip()
    return not stripped or stripped.startswith("#")


def read_matrix(source: str) -> np.ndarray:
    """
    Parse rows of whitespace- or comma-separated probabilities.

    Blank lines and lines starting with # are skipped.

    Raises:
        ParseError: On ragged rows, non-numeric tokens, or empty input
        DomainError: If an entry lies outside [0, 1]

    Example:
        read_matrix("0.99 0.5\\n0.5 0.2\\n")  # [[0.99, 0.5], [0.5, 0.2]]
    """
    rows: list[list[float]] = []
    width: int | None = None
    for lineno, line in enumerate(source.splitlines(), start=1):
        if _is_skipped(line):
            continue
        tokens = _SEPARATORS.split(line.strip())
        try:
            row = [float(token) for token in tokens]
        except ValueError:
            raise ParseError(f"non-numeric entry in {line.strip()!r}", line=lineno) from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"row has {len(row)} entries, expected {width}", line=lineno)
        for value in row:
            if not 0.0 <= value <= 1.0:
                raise DomainError(f"line {lineno}: probability {value} outside [0, 1]")
        rows.append(row)

    if not rows:
        raise ParseError("matrix input is empty")
    return np.asarray(rows, dtype=np.float64)


def read_degrees(source: str) -> DegreeSequence:
    """
    Parse one non-negative integer degree per line.

    Blank lines and # comments are skipped; empty input gives an empty
    sequence, which model validation rejects later.

    Raises:
        ParseError: On negative or non-integer tokens
    """
    degrees: list[int] = []
    for lineno, line in enumerate(source.splitlines(), start=1):
        if _is_skipped(line):
            continue
        token = line.strip()
        try:
            value = int(token)
        except ValueError:
            raise ParseError(f"degree {token!r} is not an integer", line=lineno) from None
        if value < 0:
            raise ParseError(f"degree {value} is negative", line=lineno)
        degrees.append(value)
    return DegreeSequence(tuple(degrees))
