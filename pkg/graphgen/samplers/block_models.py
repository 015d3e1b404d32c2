"""
Chung-Lu and stochastic block models as unions of Erdos-Renyi blocks.

A block model's probability matrix is constant on each (r, s) block, so each
block is grass-hopped on its own. Chung-Lu becomes a block model once nodes
are grouped by degree: t distinct degrees give t^2 blocks.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
import structlog

from graphgen.errors import DomainError, ModelValidityError, ShapeError
from graphgen.sampling import (
    Probability,
    RandomStream,
    map_with_children,
    sample_binomial,
    sample_discrete,
    uniform_int,
    uniform_ints,
)
from graphgen.samplers.edges import BallDropReport, EdgeList, concat
from graphgen.samplers.erdos_renyi import grass_hop_er_rect

logger = structlog.get_logger()


@dataclass(frozen=True)
class DegreeSequence:
    """Expected degrees d_i, one per node."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if any(d < 0 for d in self.degrees):
            raise DomainError(f"Degrees must be non-negative: {self.degrees}")

    def __len__(self) -> int:
        return len(self.degrees)

    @property
    def volume(self) -> int:
        """Total degree, sum of d_i."""
        return sum(self.degrees)

    def validate(self) -> None:
        """
        Check that every Chung-Lu probability d_i d_j / sum(d) is at most 1.

        Raises:
            ModelValidityError: If the degree sum is zero or max(d)^2 > sum(d)
        """
        volume = self.volume
        if volume <= 0:
            raise ModelValidityError("Chung-Lu needs a positive degree sum")
        top = max(self.degrees)
        if top * top > volume:
            raise ModelValidityError(
                f"Chung-Lu probability {top}*{top}/{volume} exceeds 1; lower the largest degree"
            )


@dataclass(frozen=True)
class BlockSpec:
    """Block sizes n_1..n_k and the k x k matrix Q of block probabilities."""

    sizes: tuple[int, ...]
    Q: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        Q = np.asarray(self.Q, dtype=np.float64)
        object.__setattr__(self, "Q", Q)
        k = len(self.sizes)
        if k == 0:
            raise DomainError("Block model needs at least one block")
        if any(s < 1 for s in self.sizes):
            raise DomainError(f"Block sizes must be >= 1: {self.sizes}")
        if Q.shape != (k, k):
            raise ShapeError(f"Q must be {k}x{k} for {k} blocks, got {Q.shape}")
        if np.isnan(Q).any() or Q.min() < 0.0 or Q.max() > 1.0:
            raise DomainError("Block probabilities must lie in [0, 1]")

    @classmethod
    def planted(cls, sizes: Sequence[int], within: float, between: float) -> "BlockSpec":
        """Block model with one within-block and one between-block probability."""
        k = len(sizes)
        Q = np.full((k, k), float(Probability(between)))
        np.fill_diagonal(Q, float(Probability(within)))
        return cls(tuple(sizes), Q)

    @property
    def num_nodes(self) -> int:
        """Total node count."""
        return sum(self.sizes)

    @property
    def offsets(self) -> list[int]:
        """First node index of every block."""
        return np.concatenate(([0], np.cumsum(self.sizes)[:-1])).astype(int).tolist()

    def blocks(self) -> list[tuple[int, int]]:
        """All (r, s) block coordinates in row-major order."""
        k = len(self.sizes)
        return [(r, s) for r in range(k) for s in range(k)]

    def block_of(self) -> np.ndarray:
        """Block label of every node."""
        return np.repeat(np.arange(len(self.sizes)), self.sizes)

    def probability_matrix(self) -> np.ndarray:
        """Dense marginal matrix P[i, j] = Q[block(i), block(j)] (oracle scale)."""
        labels = self.block_of()
        return self.Q[np.ix_(labels, labels)]


def chung_lu_probability(d: DegreeSequence, i: int, j: int) -> float:
    """
    Chung-Lu edge probability P_ij = d_i d_j / sum(d).

    Raises:
        ModelValidityError: If the ratio exceeds 1 or the degree sum is zero
    """
    volume = d.volume
    if volume <= 0:
        raise ModelValidityError("Chung-Lu needs a positive degree sum")
    value = d.degrees[i] * d.degrees[j] / volume
    if value > 1.0:
        raise ModelValidityError(f"P[{i},{j}] = {value} exceeds 1")
    return value


def chung_lu_matrix(d: DegreeSequence) -> np.ndarray:
    """Dense Chung-Lu probability matrix (oracle scale)."""
    d.validate()
    degrees = np.asarray(d.degrees, dtype=np.float64)
    return np.outer(degrees, degrees) / d.volume


def degree_order(d: DegreeSequence) -> np.ndarray:
    """Stable ascending sort of nodes by degree; position -> original node."""
    return np.argsort(np.asarray(d.degrees), kind="stable")


def chung_lu_as_sbm(d: DegreeSequence) -> BlockSpec:
    """
    Express a Chung-Lu model as a block model over degree groups.

    Nodes sorted by ascending degree form one block per distinct degree, and
    Q[a][b] = d_[a] d_[b] / sum(d).

    Example:
        d = (4,3,2,2,2,1,1,1) -> sizes (3, 3, 1, 1), Q[3][3] = 16/16
    """
    d.validate()
    distinct, sizes = np.unique(np.asarray(d.degrees), return_counts=True)
    values = distinct.astype(np.float64)
    Q = np.outer(values, values) / d.volume
    return BlockSpec(tuple(sizes.tolist()), Q)


def _sample_block(
    spec: BlockSpec, offsets: list[int], block: tuple[int, int], stream: RandomStream
) -> EdgeList:
    r, s = block
    piece = grass_hop_er_rect(spec.sizes[r], spec.sizes[s], float(spec.Q[r, s]), stream)
    logger.debug("Block sampled", block=block, edges=len(piece))
    return EdgeList(
        spec.num_nodes,
        spec.num_nodes,
        piece.src + offsets[r],
        piece.dst + offsets[s],
    )


def sbm_grass(spec: BlockSpec, stream: RandomStream, workers: int = 1) -> EdgeList:
    """
    Stochastic block model by grass-hopping every (r, s) block.

    Block b (row-major) samples from stream.child(b), so the output does not
    depend on the worker count. Edges are offset by the block's top-left corner.
    """
    offsets = spec.offsets

    def task(block: tuple[int, int], sub: RandomStream) -> EdgeList:
        return _sample_block(spec, offsets, block, sub)

    parts = map_with_children(task, spec.blocks(), stream, workers)
    return concat(parts, spec.num_nodes, spec.num_nodes)


def chung_lu_grass(d: DegreeSequence, stream: RandomStream, workers: int = 1) -> EdgeList:
    """
    Chung-Lu graph by grass-hopping the t^2 degree-group blocks.

    Samples sbm_grass on chung_lu_as_sbm(d) in sorted-degree order, then maps
    sorted positions back to the original node labels.
    """
    spec = chung_lu_as_sbm(d)
    order = degree_order(d)
    sorted_edges = sbm_grass(spec, stream, workers)

    logger.debug("Chung-Lu blocks sampled", groups=len(spec.sizes), blocks=len(spec.sizes) ** 2)
    return EdgeList(len(d), len(d), order[sorted_edges.src], order[sorted_edges.dst])


def chung_lu_ball(d: DegreeSequence, stream: RandomStream) -> BallDropReport:
    """
    Chung-Lu graph by ball dropping sum(d) distinct edges.

    Each endpoint is a uniform entry of a list where node i appears d_i times,
    so one drop lands on (i, j) with probability d_i d_j / sum(d)^2.
    Duplicates are rejected. Strongly skewed degrees can make the final
    distinct edges slow to reach.
    """
    d.validate()
    endpoints = np.repeat(np.arange(len(d), dtype=np.int64), d.degrees)
    n = len(d)
    target = d.volume

    seen: set[int] = set()
    order: list[int] = []
    draws = 0
    while len(order) < target:
        batch = uniform_ints(stream, 0, endpoints.size - 1, 2 * (target - len(order)))
        src = endpoints[batch[0::2]].tolist()
        dst = endpoints[batch[1::2]].tolist()
        for a, b in zip(src, dst):
            draws += 1
            cell = a * n + b
            if cell not in seen:
                seen.add(cell)
                order.append(cell)
                if len(order) == target:
                    break

    return BallDropReport(
        edges=EdgeList.from_linear(order, n, n),
        draws=draws,
        duplicates=draws - target,
    )


def sbm_ball(spec: BlockSpec, stream: RandomStream) -> BallDropReport:
    """
    Stochastic block model by ball dropping.

    Every block's edge count is drawn up front as Binomial(n_r n_s, Q_rs).
    Each drop then picks a block with weight n_r n_s Q_rs among blocks still
    short of their target, and a uniform cell inside it; duplicates are
    rejected.
    """
    blocks = spec.blocks()
    offsets = spec.offsets
    cells = np.array([spec.sizes[r] * spec.sizes[s] for r, s in blocks], dtype=np.int64)
    weights = np.array([cells[b] * spec.Q[r, s] for b, (r, s) in enumerate(blocks)])
    remaining = np.array(
        [
            sample_binomial(stream, int(cells[b]), float(spec.Q[r, s]))
            for b, (r, s) in enumerate(blocks)
        ],
        dtype=np.int64,
    )
    total = int(remaining.sum())
    live = np.where(remaining > 0, weights, 0.0)

    n = spec.num_nodes
    seen: set[int] = set()
    order: list[int] = []
    draws = 0
    while len(order) < total:
        b = sample_discrete(stream, live)
        r, s = blocks[b]
        local = uniform_int(stream, 0, int(cells[b]) - 1)
        row, col = divmod(local, spec.sizes[s])
        cell = (row + offsets[r]) * n + (col + offsets[s])
        draws += 1
        if cell in seen:
            continue
        seen.add(cell)
        order.append(cell)
        remaining[b] -= 1
        if remaining[b] == 0:
            live[b] = 0.0

    logger.debug("Block model ball drop complete", edges=total, draws=draws)
    return BallDropReport(
        edges=EdgeList.from_linear(order, n, n),
        draws=draws,
        duplicates=draws - total,
    )
