"""
Exact counting with an explicit 128-bit ceiling.

Python integers never wrap, so the ceiling is enforced here: any count that
would not fit in 128 unsigned bits raises CountOverflowError.
"""

import math

from graphgen.errors import CountOverflowError, DomainError

COUNT_BITS = 128
MAX_COUNT = (1 << COUNT_BITS) - 1

# Largest signed 64-bit rank; regions with more cells cannot be grass-hopped
MAX_RANK = (1 << 63) - 1


def checked(value: int, what: str = "count") -> int:
    """Return value, or raise if it exceeds the 128-bit count range."""
    if value > MAX_COUNT:
        raise CountOverflowError(f"{what} exceeds 2^{COUNT_BITS}: {value.bit_length()} bits")
    return value


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k), zero when k > n."""
    if n < 0 or k < 0:
        raise DomainError(f"Binomial coefficient needs n, k >= 0, got C({n}, {k})")
    return checked(math.comb(n, k), f"C({n}, {k})")


def count_regions(m: int, k: int) -> int:
    """
    Count non-decreasing length-k sequences over an alphabet of size m.

    This is the number of multisets of cardinality k drawn from m items,
    C(k + m - 1, k).
    """
    if m < 1 or k < 0:
        raise DomainError(f"count_regions needs m >= 1 and k >= 0, got m={m}, k={k}")
    return binomial(k + m - 1, k)


def count_regions_symmetric(n: int, k: int) -> int:
    """
    Count Kronecker regions for a symmetric n-by-n initiator.

    A symmetric initiator has C(n + 1, 2) distinct entries, so the count is
    C(C(n + 1, 2) + k - 1, k).
    """
    if n < 1 or k < 0:
        raise DomainError(f"count_regions_symmetric needs n >= 1 and k >= 0, got n={n}, k={k}")
    return count_regions(binomial(n + 1, 2), k)
