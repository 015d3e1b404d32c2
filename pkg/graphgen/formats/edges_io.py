"""
Edge list files: tab-separated pairs and MatrixMarket coordinate patterns.

TSV is 0-indexed, one "src<TAB>dst" line per edge. MatrixMarket is 1-indexed
with the pattern header and a "rows cols nnz" size line. Edges are written in
list order.
"""

import io
from collections.abc import Iterator
from enum import Enum
from itertools import chain
from typing import BinaryIO

import numpy as np
import structlog

from graphgen.errors import GraphIOError, ParseError
from graphgen.samplers.edges import EdgeList

logger = structlog.get_logger()

MM_HEADER = "%%MatrixMarket matrix coordinate pattern general"

# Edges formatted per write call
CHUNK_EDGES = 1 << 18


class EdgeFileFormat(str, Enum):
    """Supported edge list formats."""

    TSV = "tsv"
    MATRIX_MARKET = "mm"

    @classmethod
    def from_name(cls, name: str) -> "EdgeFileFormat":
        """Look up a format by its command-line name."""
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(f.value for f in cls)
            raise ParseError(f"Unknown edge format {name!r}; choose one of {choices}") from None


def _format_pairs(src: np.ndarray, dst: np.ndarray, delimiter: str) -> bytes:
    buffer = io.BytesIO()
    np.savetxt(buffer, np.column_stack((src, dst)), fmt="%d", delimiter=delimiter, newline="\n")
    return buffer.getvalue()


def _chunks(edges: EdgeList, offset: int, delimiter: str) -> Iterator[bytes]:
    for start in range(0, len(edges), CHUNK_EDGES):
        stop = start + CHUNK_EDGES
        src = edges.src[start:stop] + offset
        dst = edges.dst[start:stop] + offset
        yield _format_pairs(src, dst, delimiter)


def write_edges(edges: EdgeList, fmt: EdgeFileFormat, sink: BinaryIO) -> int:
    """
    Write an edge list to a byte sink.

    Args:
        edges: Edges to write, in emission order
        fmt: Output format
        sink: Binary stream

    Returns:
        Number of bytes written

    Raises:
        GraphIOError: If the sink fails

    Example:
        write_edges(EdgeList.from_pairs([(0, 1)], 2), EdgeFileFormat.TSV, sink)  # b"0\\t1\\n"
    """
    if fmt is EdgeFileFormat.TSV:
        header = b""
        body = _chunks(edges, 0, "\t")
    else:
        header = f"{MM_HEADER}\n{edges.num_rows} {edges.num_cols} {len(edges)}\n".encode("ascii")
        body = _chunks(edges, 1, " ")

    written = 0
    try:
        for block in chain([header], body):
            sink.write(block)
            written += len(block)
        sink.flush()
    except OSError as e:
        raise GraphIOError(f"Failed writing edges: {e}") from e

    logger.debug("Edges written", format=fmt.value, edges=len(edges), bytes=written)
    return written


def _parse_pair(tokens: list[str], lineno: int) -> tuple[int, int]:
    if len(tokens) != 2:
        raise ParseError(f"expected 2 fields, got {len(tokens)}", line=lineno)
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ParseError(f"non-integer edge {' '.join(tokens)!r}", line=lineno) from None


def _read_tsv(text: str, num_rows: int | None, num_cols: int | None) -> EdgeList:
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        pairs.append(_parse_pair(line.split("\t"), lineno))

    if num_rows is None:
        num_rows = max((s for s, _ in pairs), default=-1) + 1
    if num_cols is None:
        num_cols = max((d for _, d in pairs), default=-1) + 1
    return EdgeList.from_pairs(pairs, num_rows, num_cols)


def _read_matrix_market(text: str) -> EdgeList:
    lines = text.splitlines()
    if not lines or lines[0].strip() != MM_HEADER:
        raise ParseError(f"expected header {MM_HEADER!r}", line=1)

    size: tuple[int, int, int] | None = None
    pairs = []
    for lineno, line in enumerate(lines[1:], start=2):
        stripped = line.strip()
        if not stripped or stripped.startswith("%"):
            continue
        tokens = stripped.split()
        if size is None:
            if len(tokens) != 3:
                raise ParseError("expected 'rows cols nnz'", line=lineno)
            try:
                rows, cols, nnz = (int(t) for t in tokens)
            except ValueError:
                raise ParseError(f"non-integer size line {stripped!r}", line=lineno) from None
            size = (rows, cols, nnz)
            continue
        row, col = _parse_pair(tokens, lineno)
        pairs.append((row - 1, col - 1))

    if size is None:
        raise ParseError("missing size line", line=len(lines))
    rows, cols, nnz = size
    if len(pairs) != nnz:
        raise ParseError(f"size line announces {nnz} entries, found {len(pairs)}", line=len(lines))
    return EdgeList.from_pairs(pairs, rows, cols)


def read_edges(
    source: str,
    fmt: EdgeFileFormat,
    num_rows: int | None = None,
    num_cols: int | None = None,
) -> EdgeList:
    """
    Parse edge list text written by write_edges.

    TSV carries no dimensions, so they default to the largest index + 1.

    Raises:
        ParseError: On malformed lines, with the line number
        RangeError: If an index lies outside the node space
    """
    if fmt is EdgeFileFormat.TSV:
        edges = _read_tsv(source, num_rows, num_cols)
    else:
        edges = _read_matrix_market(source)
    edges.validate()
    return edges
