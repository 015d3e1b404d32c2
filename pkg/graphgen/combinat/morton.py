"""
Base-n Morton (Z-order) codes and multi-index linearisation.

Digit convention: the least-significant base-n digit of a Morton code belongs
to the row, the next to the column, alternating upward.
"""

from collections.abc import Sequence

from graphgen.errors import DomainError, RangeError


def morton_decode(code: int, n: int) -> tuple[int, int]:
    """
    Split a base-n Morton code into (row, col).

    Examples:
        morton_decode(7, 2)  # (3, 1)
        morton_decode(9, 2)  # (1, 2)
    """
    if n < 2:
        raise DomainError(f"Morton base must be >= 2, got {n}")
    if code < 0:
        raise RangeError(f"Morton code must be non-negative, got {code}")

    row = col = 0
    rowbase = colbase = 1
    to_row = True
    while code > 0:
        code, digit = divmod(code, n)
        if to_row:
            row += rowbase * digit
            rowbase *= n
        else:
            col += colbase * digit
            colbase *= n
        to_row = not to_row
    return row, col


def morton_encode(row: int, col: int, n: int, k: int) -> int:
    """
    Interleave the k base-n digits of row and col into a Morton code.

    Exact inverse of morton_decode on [0, n^(2k)).

    Raises:
        RangeError: If a coordinate lies outside [0, n^k)
    """
    if n < 2:
        raise DomainError(f"Morton base must be >= 2, got {n}")
    side = n**k
    for name, value in (("row", row), ("col", col)):
        if not 0 <= value < side:
            raise RangeError(f"Morton {name} {value} outside [0, {side})")

    code = 0
    place = 1
    for _ in range(k):
        row, row_digit = divmod(row, n)
        col, col_digit = divmod(col, n)
        code += row_digit * place + col_digit * place * n
        place *= n * n
    return code


def multiindex_to_linear(mind: Sequence[int], base: int) -> int:
    """
    Read a multi-index as a base-`base` number, most-significant entry first.

    Example:
        multiindex_to_linear([4, 0, 5], 9)  # 329
    """
    linear = 0
    for entry in mind:
        if not 0 <= entry < base:
            raise RangeError(f"Multi-index entry {entry} outside [0, {base})")
        linear = linear * base + entry
    return linear
