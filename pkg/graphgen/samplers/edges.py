"""
Edge containers shared by every sampler.

An EdgeList holds directed (src, dst) pairs in emission order over a
num_rows x num_cols node space.
"""

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from graphgen.errors import DomainError, RangeError, ShapeError


def _as_index_array(values: Iterable[int] | np.ndarray) -> np.ndarray:
    array = np.asarray(values if isinstance(values, np.ndarray) else list(values), dtype=np.int64)
    return array.reshape(-1)


@dataclass(frozen=True)
class EdgeList:
    """Directed edges over a num_rows x num_cols node space."""

    num_rows: int
    num_cols: int
    src: np.ndarray
    dst: np.ndarray

    def __post_init__(self) -> None:
        if self.num_rows < 0 or self.num_cols < 0:
            raise ShapeError(f"Invalid node space {self.num_rows}x{self.num_cols}")
        object.__setattr__(self, "src", _as_index_array(self.src))
        object.__setattr__(self, "dst", _as_index_array(self.dst))
        if self.src.shape != self.dst.shape:
            raise ShapeError("src and dst must have equal length")

    @classmethod
    def empty(cls, num_rows: int, num_cols: int | None = None) -> "EdgeList":
        """Create an edge list with no edges."""
        cols = num_rows if num_cols is None else num_cols
        return cls(num_rows, cols, np.empty(0, np.int64), np.empty(0, np.int64))

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[int, int]], num_rows: int, num_cols: int | None = None
    ) -> "EdgeList":
        """Build an edge list from (src, dst) tuples."""
        cols = num_rows if num_cols is None else num_cols
        array = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
        return cls(num_rows, cols, array[:, 0], array[:, 1])

    @classmethod
    def from_linear(
        cls, indices: Iterable[int] | np.ndarray, num_rows: int, num_cols: int
    ) -> "EdgeList":
        """Build an edge list from row-major linear cell indices."""
        linear = _as_index_array(indices)
        src, dst = np.divmod(linear, max(num_cols, 1))
        return cls(num_rows, num_cols, src, dst)

    def __len__(self) -> int:
        return int(self.src.size)

    @property
    def is_square(self) -> bool:
        """Check if the node space is square."""
        return self.num_rows == self.num_cols

    def pairs(self) -> list[tuple[int, int]]:
        """Return edges as a list of (src, dst) tuples."""
        return list(zip(self.src.tolist(), self.dst.tolist()))

    def linear(self) -> np.ndarray:
        """Return row-major linear cell indices."""
        return self.src * self.num_cols + self.dst

    def to_dense(self) -> np.ndarray:
        """Return the 0/1 adjacency matrix (oracle scale only)."""
        dense = np.zeros((self.num_rows, self.num_cols), dtype=np.int8)
        dense[self.src, self.dst] = 1
        return dense

    def sorted(self) -> "EdgeList":
        """Return a copy sorted lexicographically by (src, dst)."""
        order = np.lexsort((self.dst, self.src))
        return EdgeList(self.num_rows, self.num_cols, self.src[order], self.dst[order])

    def validate(self) -> None:
        """
        Check index bounds and uniqueness.

        Raises:
            RangeError: If an endpoint lies outside the node space
            DomainError: If a (src, dst) pair repeats
        """
        if len(self) == 0:
            return
        if self.src.min() < 0 or self.src.max() >= self.num_rows:
            raise RangeError(f"Source index outside [0, {self.num_rows})")
        if self.dst.min() < 0 or self.dst.max() >= self.num_cols:
            raise RangeError(f"Destination index outside [0, {self.num_cols})")
        if np.unique(self.linear()).size != len(self):
            raise DomainError("Edge list contains duplicate pairs")


@dataclass(frozen=True)
class BallDropReport:
    """Ball-drop result with coupon-collector accounting: draws = edges + duplicates."""

    edges: EdgeList
    draws: int
    duplicates: int

    @property
    def ratio(self) -> float:
        """Draws per distinct edge (1.0 when nothing was drawn)."""
        return self.draws / len(self.edges) if len(self.edges) else 1.0


def concat(parts: Iterable[EdgeList], num_rows: int, num_cols: int) -> EdgeList:
    """Concatenate edge lists over a shared node space, keeping order."""
    parts = list(parts)
    if not parts:
        return EdgeList.empty(num_rows, num_cols)
    return EdgeList(
        num_rows,
        num_cols,
        np.concatenate([p.src for p in parts]),
        np.concatenate([p.dst for p in parts]),
    )


def symmetrize(edges: EdgeList) -> EdgeList:
    """
    Make a directed sample undirected.

    Keeps the strict upper triangle (src < dst) and follows each kept edge
    with its reverse; the diagonal is dropped.

    Raises:
        ShapeError: If the node space is not square
    """
    if not edges.is_square:
        raise ShapeError(f"Cannot symmetrize a {edges.num_rows}x{edges.num_cols} node space")
    upper = edges.src < edges.dst
    src = edges.src[upper]
    dst = edges.dst[upper]
    return EdgeList(
        edges.num_rows,
        edges.num_cols,
        np.column_stack((src, dst)).reshape(-1),
        np.column_stack((dst, src)).reshape(-1),
    )
