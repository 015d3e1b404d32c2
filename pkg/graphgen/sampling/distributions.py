"""
Discrete distributions derived from a RandomStream.

Geometric gaps drive every grass-hopping sampler, binomials fix ball-drop edge
counts, and weighted discrete draws pick blocks for block-model ball dropping.
"""

import math
from collections.abc import Iterator, Sequence

import numpy as np

from graphgen.errors import CapacityError, DomainError
from graphgen.sampling.stream import Probability, RandomStream, uniform_unit

# Largest gap representable in signed 64-bit index arithmetic
MAX_GAP = (1 << 63) - 1

# numpy's binomial takes int64 trial counts
MAX_BINOMIAL_TRIALS = (1 << 63) - 1

# Upper bound on gaps drawn per numpy batch
GAP_BATCH = 1 << 20


def geometric_gaps(stream: RandomStream, p: float) -> Iterator[int]:
    """
    Yield an endless sequence of Geometric(p) gaps by inverse CDF.

    Each gap X has Prob[X = k] = (1-p)^(k-1) p, computed from one uniform u as
    floor(ln(1-u) / ln(1-p)) + 1. For p = 1 every gap is 1.

    Args:
        stream: Source of uniform variates
        p: Success probability, 0 < p <= 1

    Raises:
        DomainError: If p <= 0 (the expected gap is infinite)
        CapacityError: If a gap exceeds 2^63 - 1
    """
    p = Probability(p)
    if p <= 0.0:
        raise DomainError("Geometric distribution needs p > 0")

    if p == 1.0:
        while True:
            stream.tally["geometric"] += 1
            yield 1

    log_q = math.log1p(-p)
    while True:
        stream.tally["geometric"] += 1
        u = float(stream.generator.random())
        gap = math.floor(math.log1p(-u) / log_q) + 1
        if gap > MAX_GAP:
            raise CapacityError(f"Geometric gap overflows 64 bits (p={p})")
        yield gap


def sample_geometric(stream: RandomStream, p: float) -> int:
    """Draw one Geometric(p) variate (number of trials to first success)."""
    return next(geometric_gaps(stream, p))


def sample_binomial(stream: RandomStream, trials: int, p: float) -> int:
    """
    Draw an exact Binomial(trials, p) variate.

    numpy inverts the CDF for small means and uses the BTPE rejection
    algorithm otherwise; both are exact.
    """
    p = Probability(p)
    if trials < 0:
        raise DomainError(f"Binomial trials must be non-negative, got {trials}")
    if trials > MAX_BINOMIAL_TRIALS:
        raise CapacityError(f"Binomial trials exceed 2^63 - 1: {trials}")
    if trials == 0 or p == 0.0:
        return 0
    if p == 1.0:
        return trials
    stream.tally["binomial"] += 1
    return int(stream.generator.binomial(trials, p))


def sample_discrete(stream: RandomStream, weights: Sequence[float] | np.ndarray) -> int:
    """
    Draw index i with probability weights[i] / sum(weights).

    Uses a cumulative sum and a binary search on one uniform variate.

    Raises:
        DomainError: If weights are empty, negative, or sum to zero
    """
    cumulative = np.cumsum(np.asarray(weights, dtype=np.float64))
    if cumulative.size == 0:
        raise DomainError("Discrete distribution needs at least one weight")
    if np.any(np.asarray(weights, dtype=np.float64) < 0):
        raise DomainError("Discrete weights must be non-negative")
    total = float(cumulative[-1])
    if not total > 0.0:
        raise DomainError("Discrete weights must have a positive sum")

    target = uniform_unit(stream) * total
    index = int(np.searchsorted(cumulative, target, side="right"))
    # Rounding can push target onto the final boundary; step back to a live index
    index = min(index, cumulative.size - 1)
    while index > 0 and cumulative[index] == cumulative[index - 1]:
        index -= 1
    return index


def geometric_gap_block(stream: RandomStream, p: float, size: int) -> np.ndarray:
    """
    Draw `size` Geometric(p) gaps at once as an int64 array.

    Uses the same inverse CDF as geometric_gaps. Nothing is tallied here;
    callers count only the gaps they consume.

    Raises:
        CapacityError: If a gap exceeds 2^63 - 1
    """
    if p == 1.0:
        return np.ones(size, dtype=np.int64)
    u = stream.generator.random(size)
    gaps = np.floor(np.log1p(-u) / math.log1p(-p)) + 1.0
    if gaps.size and gaps.max() >= float(1 << 63):
        raise CapacityError(f"Geometric gap overflows 64 bits (p={p})")
    return gaps.astype(np.int64)


def geometric_landings(stream: RandomStream, p: float, limit: int) -> np.ndarray:
    """
    Walk from -1 by Geometric(p) gaps and return every landing below `limit`.

    Gaps are drawn in batches sized to the expected remaining landings and
    cut at the first overshoot. The stream tallies exactly len(result) + 1
    geometric draws, as if the gaps had been drawn one at a time.

    Args:
        stream: Source of uniform variates
        p: Success probability, 0 < p <= 1
        limit: Exclusive upper bound on landing positions

    Returns:
        Strictly increasing int64 positions in [0, limit)

    Raises:
        DomainError: If p <= 0
    """
    p = Probability(p)
    if p <= 0.0:
        raise DomainError("Geometric distribution needs p > 0")

    # size * (limit + 1) + limit must stay below 2^63 for int64 cumsums
    max_batch = min((MAX_GAP - limit) // (limit + 1), GAP_BATCH) if limit < MAX_GAP else 0
    if max_batch < 1:
        return _landings_one_by_one(stream, p, limit)

    parts: list[np.ndarray] = []
    landed = 0
    index = -1
    while True:
        expected = max(limit - 1 - index, 0) * p
        size = int(min(expected + 4.0 * math.sqrt(expected) + 16.0, max_batch))
        gaps = np.minimum(geometric_gap_block(stream, p, size), limit + 1)
        positions = index + np.cumsum(gaps)
        cut = int(np.searchsorted(positions, limit))
        parts.append(positions[:cut])
        landed += cut
        if cut < size:
            break
        index = int(positions[-1])

    stream.tally["geometric"] += landed + 1
    return np.concatenate(parts)


def _landings_one_by_one(stream: RandomStream, p: float, limit: int) -> np.ndarray:
    landed: list[int] = []
    index = -1
    gaps = geometric_gaps(stream, p)
    gap = next(gaps)
    while index + gap < limit:
        index += gap
        landed.append(index)
        gap = next(gaps)
    return np.asarray(landed, dtype=np.int64)
