"""
Empirical per-cell edge frequencies and the 4-sigma acceptance band.

A sampler is run S times on child streams; a cell with marginal probability
P is accepted when its observed frequency is within 4 sqrt(P (1 - P) / S).
"""

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import structlog

from graphgen.errors import DomainError, ShapeError
from graphgen.sampling import RandomStream, map_with_children
from graphgen.samplers.edges import EdgeList

logger = structlog.get_logger()

DEFAULT_SIGMAS = 4.0

Sampler = Callable[[RandomStream], EdgeList]


def sigma_bound(
    p: float | np.ndarray, samples: int, sigmas: float = DEFAULT_SIGMAS
) -> float | np.ndarray:
    """
    Half-width sigmas * sqrt(p (1 - p) / samples) of the acceptance band.

    Example:
        sigma_bound(0.25, 20000)  # ~0.01225
    """
    if samples < 1:
        raise DomainError(f"Need at least one sample, got {samples}")
    p = np.asarray(p, dtype=np.float64)
    bound = sigmas * np.sqrt(p * (1.0 - p) / samples)
    return float(bound) if bound.ndim == 0 else bound


@dataclass
class FrequencyMatrix:
    """Per-cell hit counts over `samples` runs, plus each run's edge count."""

    counts: np.ndarray
    samples: int
    edge_counts: np.ndarray

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise DomainError("FrequencyMatrix needs samples >= 1")
        if self.counts.size and int(self.counts.max()) > self.samples:
            raise DomainError("A cell count exceeds the sample count")

    @property
    def frequencies(self) -> np.ndarray:
        """Observed hit frequency of every cell."""
        return self.counts / self.samples

    def deviations(self, P: np.ndarray) -> np.ndarray:
        """Absolute gap between observed frequency and P."""
        P = np.asarray(P, dtype=np.float64)
        if P.shape != self.counts.shape:
            raise ShapeError(f"Expected matrix {P.shape} does not match counts {self.counts.shape}")
        return np.abs(self.frequencies - P)

    def violations(self, P: np.ndarray, sigmas: float = DEFAULT_SIGMAS) -> list[tuple[int, int]]:
        """Cells whose frequency lies outside the sigma band of P."""
        P = np.asarray(P, dtype=np.float64)
        outside = self.deviations(P) > sigma_bound(P, self.samples, sigmas)
        return [(int(i), int(j)) for i, j in np.argwhere(outside)]

    def within(self, P: np.ndarray, sigmas: float = DEFAULT_SIGMAS) -> bool:
        """Check every cell against P at the given band width."""
        return not self.violations(P, sigmas)


def empirical_frequency(
    sampler: Sampler,
    samples: int,
    stream: RandomStream,
    workers: int = 1,
) -> FrequencyMatrix:
    """
    Run a sampler `samples` times and tally per-cell hits.

    Run i draws from stream.child(i); the node space is taken from the
    first run.

    Args:
        sampler: Function from a stream to an EdgeList
        samples: Number of runs, at least 1
        stream: Parent stream
        workers: Thread count for the runs

    Raises:
        DomainError: If samples < 1
        ShapeError: If runs disagree on the node space
    """
    if samples < 1:
        raise DomainError(f"Need at least one sample, got {samples}")

    def task(_: int, sub: RandomStream) -> EdgeList:
        return sampler(sub)

    runs = map_with_children(task, list(range(samples)), stream, workers)
    rows, cols = runs[0].num_rows, runs[0].num_cols
    cells = rows * cols

    counts = np.zeros(cells, dtype=np.int64)
    edge_counts = np.empty(samples, dtype=np.int64)
    for i, edges in enumerate(runs):
        if (edges.num_rows, edges.num_cols) != (rows, cols):
            raise ShapeError("Sampler runs disagree on the node space")
        counts += np.bincount(edges.linear(), minlength=cells)
        edge_counts[i] = len(edges)

    logger.debug("Frequencies collected", samples=samples, cells=cells)
    return FrequencyMatrix(counts.reshape(rows, cols), samples, edge_counts)
