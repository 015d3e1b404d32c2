"""
Multiset permutations: counting, unranking and ranking in lexicographic order.

Grass-hopping inside a Kronecker region lands on linear positions
0 .. N-1; unranking turns a position into the multiplication-table
multi-index it stands for.
"""

import math
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field

from graphgen.combinat.counting import checked
from graphgen.combinat.sequences import NDSequence, validate_ndseq
from graphgen.errors import DomainError, RangeError


@dataclass
class MultisetCounter:
    """Counter representation of a multiset: value -> multiplicity plus sorted keys."""

    counts: dict[int, int]
    keys: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        if any(c < 1 for c in self.counts.values()):
            raise DomainError(f"Multiplicities must be >= 1: {self.counts}")
        if not self.keys:
            self.keys = sorted(self.counts)
        elif self.keys != sorted(self.counts):
            raise DomainError(f"Keys {self.keys} do not match counts {sorted(self.counts)}")

    @property
    def cardinality(self) -> int:
        """Total number of elements, counting repeats."""
        return sum(self.counts.values())


def ndseq_to_counter(seq: NDSequence) -> MultisetCounter:
    """
    Build the counter representation of a non-decreasing sequence.

    Example:
        ndseq_to_counter([0, 1, 2, 2])  # counts {0: 1, 1: 1, 2: 2}, keys [0, 1, 2]
    """
    validate_ndseq(seq)
    return MultisetCounter(dict(Counter(seq)))


def counter_to_ndseq(mset: MultisetCounter) -> NDSequence:
    """Expand a counter back to its non-decreasing sequence."""
    seq: NDSequence = []
    for key in mset.keys:
        seq.extend([key] * mset.counts[key])
    return seq


def num_multiset_permutations(mset: MultisetCounter) -> int:
    """
    Count distinct arrangements of a multiset: k! / (a_1! a_2! ... a_t!).

    Raises:
        CountOverflowError: If the count exceeds 2^128
    """
    count = math.factorial(mset.cardinality)
    for multiplicity in mset.counts.values():
        count //= math.factorial(multiplicity)
    return checked(count, "multiset permutation count")


def prefix_counts(mset: MultisetCounter) -> dict[int, int]:
    """
    Count the permutations that begin with each distinct value.

    The values sum to num_multiset_permutations(mset), which is the
    completeness check behind unranking.
    """
    total = num_multiset_permutations(mset)
    k = mset.cardinality
    return {key: total * mset.counts[key] // k for key in mset.keys}


def unrank_multiset(seq: NDSequence, rank: int) -> list[int]:
    """
    Return the rank-th (0-based) distinct permutation of seq in lexicographic order.

    Works on a scratch copy of the counter: at each position, the permutations
    starting with key s number total * a_s / remaining, so the first key whose
    block contains the rank is the next symbol.

    Examples:
        unrank_multiset([0, 1, 1, 3], 1)  # [0, 1, 3, 1]
        unrank_multiset([0, 1, 2, 2], 4)  # [1, 2, 0, 2]

    Raises:
        RangeError: If rank is negative or not below the permutation count
    """
    mset = ndseq_to_counter(seq)
    total = num_multiset_permutations(mset)
    if rank < 0 or rank >= total:
        raise RangeError(f"rank too large: {rank} for {total} permutations of {seq}")

    counts = dict(mset.counts)
    keys = list(mset.keys)
    remaining = mset.cardinality
    out: list[int] = []

    while remaining:
        for key in keys:
            place = total * counts[key] // remaining
            if rank < place:
                out.append(key)
                counts[key] -= 1
                if counts[key] == 0:
                    keys.remove(key)
                total = place
                remaining -= 1
                break
            rank -= place
    return out


def rank_multiset(perm: Sequence[int]) -> int:
    """Return the lexicographic rank of a multiset permutation (inverse of unrank)."""
    counts = dict(Counter(perm))
    total = math.factorial(len(perm))
    for multiplicity in counts.values():
        total //= math.factorial(multiplicity)

    rank = 0
    remaining = len(perm)
    for symbol in perm:
        for key in sorted(counts):
            if key == symbol:
                break
            rank += total * counts[key] // remaining
        total = total * counts[symbol] // remaining
        counts[symbol] -= 1
        if counts[symbol] == 0:
            del counts[symbol]
        remaining -= 1
    return rank
