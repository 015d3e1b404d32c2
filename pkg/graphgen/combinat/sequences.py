"""
Non-decreasing sequences: the labels of Erdos-Renyi regions.

A region of a k-fold Kronecker power is a multiset of k initiator entries,
written as a non-decreasing sequence over the alphabet [0, m - 1].
Exhausted iteration is flagged by the all -1 sentinel.
"""

from collections.abc import Iterator

from graphgen.combinat.counting import count_regions
from graphgen.errors import ContractError, DomainError, RangeError

NDSequence = list[int]

SENTINEL = -1


def is_sentinel(seq: NDSequence) -> bool:
    """Check whether seq is the exhausted-iteration sentinel."""
    return len(seq) > 0 and all(v == SENTINEL for v in seq)


def validate_ndseq(seq: NDSequence, m: int | None = None) -> None:
    """
    Check that seq is non-decreasing and, if m is given, within [0, m - 1].

    Raises:
        DomainError: If seq is empty or decreases
        RangeError: If a value lies outside the alphabet
    """
    if not seq:
        raise DomainError("Sequence must have length >= 1")
    for a, b in zip(seq, seq[1:]):
        if a > b:
            raise DomainError(f"Sequence is not non-decreasing: {seq}")
    if seq[0] < 0 or (m is not None and seq[-1] >= m):
        raise RangeError(f"Sequence {seq} leaves alphabet [0, {m})")


def next_region(cur: NDSequence, m: int) -> NDSequence:
    """
    Return the lexicographic successor among non-decreasing sequences.

    Cases for m = 4:
        [0, 1, 1, 2] -> [0, 1, 1, 3]   easy
        [1, 3, 3, 3] -> [2, 2, 2, 2]   spill
        [3, 3, 3, 3] -> [-1, -1, -1, -1]   spill and done

    The input is not modified.

    Raises:
        ContractError: If cur is the sentinel
    """
    if is_sentinel(cur):
        raise ContractError("next_region called on the exhausted sentinel")
    validate_ndseq(cur, m)

    nxt = list(cur)
    # Rightmost slot that can still grow; everything after it resets to its value
    pos = len(nxt) - 1
    while pos >= 0 and nxt[pos] == m - 1:
        pos -= 1
    if pos < 0:
        return [SENTINEL] * len(nxt)

    value = nxt[pos] + 1
    for i in range(pos, len(nxt)):
        nxt[i] = value
    return nxt


def iter_regions(m: int, k: int) -> Iterator[NDSequence]:
    """Lazily yield all non-decreasing length-k sequences over [0, m - 1]."""
    if m < 1 or k < 1:
        raise DomainError(f"regions needs m >= 1 and k >= 1, got m={m}, k={k}")
    cur = [0] * k
    while not is_sentinel(cur):
        yield cur
        cur = next_region(cur, m)


def regions(m: int, k: int) -> list[NDSequence]:
    """
    List all non-decreasing length-k sequences over [0, m - 1] in lexicographic order.

    The result has count_regions(m, k) = C(k + m - 1, k) entries.

    Example:
        regions(4, 3)  # [[0,0,0], [0,0,1], ..., [3,3,3]], 20 sequences
    """
    out = list(iter_regions(m, k))
    assert len(out) == count_regions(m, k)
    return out
