"""
Lexicographic unranking of combinations (strictly increasing sequences).
"""

from graphgen.combinat.counting import binomial
from graphgen.errors import DomainError, RangeError


def unrank_combination(rank: int, max_val: int, length: int) -> list[int]:
    """
    Return the rank-th strictly increasing length-`length` sequence over [0, max_val - 1].

    The next value is found by counting the combinations that start with each
    candidate, C(max_val - v - 1, slots - 1), and skipping whole blocks.

    Examples:
        unrank_combination(0, 6, 2)   # [0, 1]
        unrank_combination(14, 6, 2)  # [4, 5]

    Raises:
        RangeError: If rank is negative or not below C(max_val, length)
    """
    if max_val < 0 or length < 0:
        raise DomainError(f"unrank_combination needs max_val, length >= 0, got {max_val}, {length}")
    total = binomial(max_val, length)
    if rank < 0 or rank >= total:
        raise RangeError(f"Combination rank {rank} outside [0, C({max_val}, {length}) = {total})")

    out: list[int] = []
    value = 0
    for slots in range(length, 0, -1):
        while True:
            block = binomial(max_val - value - 1, slots - 1)
            if rank < block:
                break
            rank -= block
            value += 1
        out.append(value)
        value += 1
    return out
