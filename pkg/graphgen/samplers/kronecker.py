"""
Stochastic Kronecker graphs by grass-hopping Erdos-Renyi regions.

The k-fold Kronecker power of an n x n initiator K has at most C(k + n^2 - 1, k)
distinct probabilities. Each one is a region of the multiplication table of
v = vec(K), labelled by a non-decreasing sequence. Sampling a graph:

1. enumerate regions of the multiplication table
2. grass-hop positions inside each region and unrank them to multi-indices
3. map each multi-index to a Kronecker (row, col) through a base-n Morton decode
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import reduce
from typing import Literal

import numpy as np
import structlog

from graphgen.combinat import (
    MAX_RANK,
    NDSequence,
    iter_regions,
    morton_decode,
    multiindex_to_linear,
    ndseq_to_counter,
    num_multiset_permutations,
    unrank_multiset,
)
from graphgen.errors import CapacityError, DomainError, RangeError, ShapeError
from graphgen.sampling import RandomStream, geometric_landings, map_with_children
from graphgen.samplers.edges import EdgeList
from graphgen.samplers.erdos_renyi import coin_flip_matrix

logger = structlog.get_logger()

# k! must fit in 128 bits for exact region sizes
MAX_POWER = 34

# Largest side of the dense oracle matrix
DENSE_ORACLE_CELLS = 1 << 12

Mapping = Literal["morton", "backward"]


@dataclass(frozen=True)
class Initiator:
    """An n x n initiator matrix of probabilities."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.float64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ShapeError(f"Initiator must be square, got shape {entries.shape}")
        if entries.shape[0] < 2:
            raise ShapeError("Initiator side must be >= 2")
        if np.isnan(entries).any() or entries.min() < 0.0 or entries.max() > 1.0:
            raise DomainError("Initiator entries must lie in [0, 1]")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "Initiator":
        """Build an initiator from nested row lists."""
        return cls(np.asarray(rows, dtype=np.float64))

    @property
    def n(self) -> int:
        """Side length."""
        return int(self.entries.shape[0])

    @property
    def v(self) -> list[float]:
        """Column-major vectorisation vec(K)."""
        return vectorize(self)


@dataclass
class RegionSample:
    """Hits landed inside one Erdos-Renyi region of the multiplication table."""

    region: NDSequence
    prob: float
    size: int
    hits: list[list[int]] = field(default_factory=list)


def vectorize(K: Initiator) -> list[float]:
    """
    Stack the columns of K: vec([[a, b], [c, d]]) = [a, c, b, d].
    """
    return K.entries.flatten(order="F").tolist()


def multtable(r: Sequence[int], v: Sequence[float]) -> float:
    """
    Value of the multiplication table at r: v[r_0] * v[r_1] * ... left to right.

    Example:
        multtable([0, 2, 2], [0.99, 0.5, 0.5, 0.2])  # 0.2475
    """
    final = 1.0
    for index in r:
        if not 0 <= index < len(v):
            raise RangeError(f"Multiplication-table index {index} outside [0, {len(v)})")
        final *= v[index]
    return final


def grass_hop_region(r: NDSequence, v: Sequence[float], stream: RandomStream) -> list[list[int]]:
    """
    Grass-hop the positions of one region and unrank each landing.

    Positions 0 .. size - 1 enumerate the distinct permutations of r in
    lexicographic order; each cell is hit with probability multtable(r, v).
    A zero-probability region returns no hits and draws nothing.

    Raises:
        CapacityError: If the region has 2^63 or more cells
    """
    prob = multtable(r, v)
    if prob == 0.0:
        return []
    size = num_multiset_permutations(ndseq_to_counter(r))
    if size > MAX_RANK:
        raise CapacityError(f"Region {r} has {size} cells, beyond 64-bit ranks")
    positions = geometric_landings(stream, prob, size)
    return [unrank_multiset(r, position) for position in positions.tolist()]


def map_mult_to_kron(mind: Sequence[int], n: int) -> tuple[int, int]:
    """
    Map a multiplication-table multi-index to a Kronecker (row, col).

    Reads the multi-index as a base n^2 number and Morton-decodes it in base n.

    Examples:
        map_mult_to_kron([1, 3], 2)     # (3, 1)
        map_mult_to_kron([4, 0, 7], 3)  # (10, 11)
    """
    return morton_decode(multiindex_to_linear(mind, n * n), n)


def backward_map(mind: Sequence[int], n: int) -> tuple[int, int]:
    """
    Same map as map_mult_to_kron without the linear index.

    Entry i contributes (r_i mod n) to the row digit and (r_i div n) to the
    column digit at place n^(k - 1 - i), zooming one level per entry.
    """
    row = col = 0
    base = n * n
    for entry in mind:
        if not 0 <= entry < base:
            raise RangeError(f"Multi-index entry {entry} outside [0, {base})")
        high, low = divmod(entry, n)
        row = row * n + low
        col = col * n + high
    return row, col


def _check_power(K: Initiator, k: int) -> int:
    if not 1 <= k <= MAX_POWER:
        raise CapacityError(f"Kronecker power must lie in [1, {MAX_POWER}], got {k}")
    side = K.n**k
    if side > MAX_RANK:
        raise CapacityError(f"Kronecker side {K.n}^{k} does not fit in 64-bit indices")
    return side


def kronecker_power_dense(K: Initiator, k: int, max_side: int = DENSE_ORACLE_CELLS) -> np.ndarray:
    """
    Dense k-fold Kronecker power of K (oracle only).

    Raises:
        CapacityError: If n^k exceeds max_side
    """
    side = _check_power(K, k)
    if side > max_side:
        raise CapacityError(f"Dense Kronecker oracle of side {side} exceeds {max_side}")
    return reduce(np.kron, [K.entries] * k)


def expected_edge_count(K: Initiator, k: int) -> float:
    """Expected number of edges, (sum of K)^k."""
    return float(K.entries.sum()) ** k


def sample_regions(
    K: Initiator, k: int, stream: RandomStream, workers: int = 1
) -> list[RegionSample]:
    """
    Grass-hop every region of the k-level multiplication table.

    Region i (in lexicographic order) samples from stream.child(i), so the
    result is the same for any worker count. Zero-probability regions are
    reported with no hits.
    """
    _check_power(K, k)
    v = vectorize(K)

    def task(region: NDSequence, sub: RandomStream) -> RegionSample:
        prob = multtable(region, v)
        size = num_multiset_permutations(ndseq_to_counter(region))
        return RegionSample(region, prob, size, grass_hop_region(region, v, sub))

    labels = [list(r) for r in iter_regions(K.n * K.n, k)]
    samples = map_with_children(task, labels, stream, workers)
    logger.debug("Kronecker regions sampled", regions=len(samples), power=k)
    return samples


def grass_hop_kron(
    K: Initiator,
    k: int,
    stream: RandomStream,
    workers: int = 1,
    mapping: Mapping = "morton",
) -> EdgeList:
    """
    Stochastic Kronecker graph of K^(k) by grass-hopping each region.

    Every cell (i, j) is an edge with probability exactly (K^(k))[i, j]. Uses
    one geometric draw per edge plus one overshoot per nonzero region.

    Example:
        grass_hop_kron(Initiator.from_rows([[0.99, 0.5], [0.5, 0.2]]), 3, stream)
    """
    side = _check_power(K, k)
    to_kron = map_mult_to_kron if mapping == "morton" else backward_map

    src: list[int] = []
    dst: list[int] = []
    for sample in sample_regions(K, k, stream, workers):
        for hit in sample.hits:
            row, col = to_kron(hit, K.n)
            src.append(row)
            dst.append(col)
    return EdgeList(side, side, src, dst)


def coin_flip_kron(
    K: Initiator, k: int, stream: RandomStream, max_side: int = DENSE_ORACLE_CELLS
) -> EdgeList:
    """Coin-flip oracle over the dense Kronecker power."""
    return coin_flip_matrix(kronecker_power_dense(K, k, max_side), stream)


def count_sampled_regions(samples: Sequence[RegionSample]) -> int:
    """Number of regions that drew geometric gaps (nonzero probability)."""
    return sum(1 for s in samples if s.prob > 0.0)

