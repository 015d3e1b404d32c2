"""
Erdos-Renyi samplers: coin flipping, ball dropping and grass-hopping.

Cells are linearised row-major (src = index // cols, dst = index % cols).
Every sampler here gives each cell marginal probability exactly p.
"""

import numpy as np
import structlog

from graphgen.combinat import binomial, unrank_combination
from graphgen.errors import CapacityError, DomainError
from graphgen.sampling import (
    Probability,
    RandomStream,
    geometric_landings,
    sample_binomial,
    uniform_below,
    uniform_block,
    uniform_ints,
)
from graphgen.samplers.edges import BallDropReport, EdgeList

logger = structlog.get_logger()


def _check_nodes(*sizes: int) -> None:
    for size in sizes:
        if size < 1:
            raise DomainError(f"Node counts must be >= 1, got {size}")


def coin_flip_matrix(P: np.ndarray, stream: RandomStream) -> EdgeList:
    """
    Flip one coin per cell of a probability matrix.

    Columns are visited in order and each column draws one uniform per row,
    so emission order is column-major. Cell (i, j) is an edge when u < P[i, j].

    Args:
        P: Rectangular matrix of probabilities
        stream: Source of randomness

    Raises:
        DomainError: If an entry lies outside [0, 1]
    """
    P = np.asarray(P, dtype=np.float64)
    if P.ndim != 2:
        raise DomainError(f"Probability matrix must be 2-D, got shape {P.shape}")
    if P.size and (np.isnan(P).any() or P.min() < 0.0 or P.max() > 1.0):
        raise DomainError("Probability matrix entries must lie in [0, 1]")

    rows, cols = P.shape
    src_parts = []
    dst_parts = []
    for j in range(cols):
        hits = np.flatnonzero(uniform_block(stream, rows) < P[:, j])
        src_parts.append(hits)
        dst_parts.append(np.full(hits.size, j, dtype=np.int64))

    if not src_parts:
        return EdgeList.empty(rows, cols)
    return EdgeList(rows, cols, np.concatenate(src_parts), np.concatenate(dst_parts))


def coin_flip_er(n: int, p: float, stream: RandomStream) -> EdgeList:
    """Erdos-Renyi G(n, p) by flipping all n^2 coins (the O(n^2) oracle)."""
    _check_nodes(n)
    p = Probability(p)
    src_parts = []
    dst_parts = []
    for j in range(n):
        hits = np.flatnonzero(uniform_block(stream, n) < p)
        src_parts.append(hits)
        dst_parts.append(np.full(hits.size, j, dtype=np.int64))
    return EdgeList(n, n, np.concatenate(src_parts), np.concatenate(dst_parts))


def _ball_drop_cells(cells: int, m: int, stream: RandomStream) -> tuple[list[int], int]:
    """
    Drop uniform balls into [0, cells) until m distinct cells are hit.

    Balls are drawn in batches sized to the outstanding count and consumed
    one at a time; only consumed balls count as draws.
    """
    seen: set[int] = set()
    order: list[int] = []
    draws = 0
    while len(order) < m:
        for cell in uniform_ints(stream, 0, cells - 1, m - len(order)).tolist():
            draws += 1
            if cell not in seen:
                seen.add(cell)
                order.append(cell)
                if len(order) == m:
                    break
    return order, draws


def ball_drop_er(n: int, p: float, stream: RandomStream) -> BallDropReport:
    """
    Erdos-Renyi G(n, p) by ball dropping.

    The edge count m ~ Binomial(n^2, p) is drawn first; uniform cells are then
    dropped and duplicates rejected until m distinct edges exist. Intended for
    p <= 0.5; see ball_drop_er_complement for denser graphs.
    """
    _check_nodes(n)
    p = Probability(p)
    cells = n * n
    m = sample_binomial(stream, cells, p)
    order, draws = _ball_drop_cells(cells, m, stream)

    logger.debug("Ball drop complete", n=n, p=p, edges=m, draws=draws)
    return BallDropReport(
        edges=EdgeList.from_linear(order, n, n),
        draws=draws,
        duplicates=draws - m,
    )


def ball_drop_er_complement(n: int, p: float, stream: RandomStream) -> BallDropReport:
    """
    Erdos-Renyi G(n, p) for p > 0.5 by ball dropping the non-edges.

    Runs ball_drop_er(n, 1 - p) and returns every cell it did not pick, in
    row-major order. Draw counts describe the non-edge drop.
    """
    _check_nodes(n)
    p = Probability(p)
    if p <= 0.5:
        raise DomainError(f"Complement ball drop needs p > 0.5, got {p}")

    missing = ball_drop_er(n, 1.0 - p, stream)
    present = np.ones(n * n, dtype=bool)
    present[missing.edges.linear()] = False
    return BallDropReport(
        edges=EdgeList.from_linear(np.flatnonzero(present), n, n),
        draws=missing.draws,
        duplicates=missing.duplicates,
    )


def grass_hop_er_rect(rows: int, cols: int, p: float, stream: RandomStream) -> EdgeList:
    """
    Erdos-Renyi block of size rows x cols by grass-hopping.

    The linear index starts at -1 and advances by Geometric(p) gaps; every
    landing index below rows * cols is an edge and the first overshoot ends
    the walk. Consumes exactly |edges| + 1 geometric draws (none when p = 0).

    Example:
        gaps 2, 4, 3 on a 3x3 block land on 1, 5, 8 -> [(0, 1), (1, 2), (2, 2)]
    """
    _check_nodes(rows, cols)
    p = Probability(p)
    if p == 0.0:
        return EdgeList.empty(rows, cols)
    return EdgeList.from_linear(geometric_landings(stream, p, rows * cols), rows, cols)


def grass_hop_er(n: int, p: float, stream: RandomStream) -> EdgeList:
    """Erdos-Renyi G(n, p) by grass-hopping in O(|edges|) work."""
    return grass_hop_er_rect(n, n, p, stream)


def fixed_edge_er(n: int, m: int, stream: RandomStream) -> EdgeList:
    """
    Uniform undirected graph with n nodes and exactly m edges.

    Draws a uniform graph rank in [0, C(C(n, 2), m)), unranks it to m
    increasing pair indices, and unranks each pair index to nodes (a, b) with
    a < b. Edges are emitted once, as src < dst.

    Raises:
        CapacityError: If m > C(n, 2), or the rank space exceeds 2^128
    """
    _check_nodes(n)
    pairs = binomial(n, 2)
    if m < 0 or m > pairs:
        raise CapacityError(f"Cannot place {m} edges among {pairs} node pairs")

    graphs = binomial(pairs, m)
    rank = uniform_below(stream, graphs)
    chosen = [unrank_combination(pair, n, 2) for pair in unrank_combination(rank, pairs, m)]

    logger.debug("Fixed-edge graph drawn", n=n, m=m, rank_bits=graphs.bit_length())
    return EdgeList.from_pairs(((a, b) for a, b in chosen), n, n)
