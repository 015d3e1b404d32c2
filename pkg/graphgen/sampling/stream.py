"""
Seeded random streams for graphgen.

All randomness in the library flows through a RandomStream. The generator is
pinned to numpy's PCG64 seeded through a SeedSequence, so a seed names the same
variate sequence on every platform and run.
"""

import math
from collections import Counter

import numpy as np

from graphgen.errors import CapacityError, DomainError, RangeError

GENERATOR_VERSION = "pcg64/seedsequence-1"

MASK_64 = (1 << 64) - 1
MAX_UNIFORM_BITS = 128


def parse_seed(value: int | str) -> int:
    """
    Parse a 64-bit unsigned seed.

    Args:
        value: Integer, decimal text, or 0x-prefixed hex text

    Returns:
        Seed in [0, 2^64)
    """
    if isinstance(value, str):
        text = value.strip().replace("_", "")
        try:
            seed = int(text, 16) if text.lower().startswith("0x") else int(text, 10)
        except ValueError:
            raise DomainError(f"Seed must be decimal or 0x-hex, got {value!r}") from None
    else:
        seed = int(value)

    if not 0 <= seed <= MASK_64:
        raise DomainError(f"Seed must fit in 64 unsigned bits, got {seed}")
    return seed


class Probability(float):
    """A float constrained to [0, 1]."""

    def __new__(cls, value: float) -> "Probability":
        number = float(value)
        if math.isnan(number) or not 0.0 <= number <= 1.0:
            raise DomainError(f"Probability must lie in [0, 1], got {value!r}")
        return super().__new__(cls, number)


class RandomStream:
    """
    Single-owner deterministic stream of uniform variates.

    Streams are not shared between concurrent tasks. Parallel work derives
    child streams with child(), keyed by a task index.
    """

    def __init__(self, seed: int, spawn_key: tuple[int, ...] = ()):
        """
        Initialize the stream.

        Args:
            seed: 64-bit unsigned seed
            spawn_key: Path of child indices from the root stream
        """
        self.seed = parse_seed(seed)
        self.spawn_key = spawn_key
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=spawn_key)
        self.generator = np.random.Generator(np.random.PCG64(sequence))
        self.tally: Counter[str] = Counter()

    def __repr__(self) -> str:
        return f"RandomStream(seed={self.seed:#x}, spawn_key={self.spawn_key})"

    def child(self, index: int) -> "RandomStream":
        """Derive the child stream for a task index."""
        if index < 0:
            raise RangeError(f"Child index must be non-negative, got {index}")
        return RandomStream(self.seed, self.spawn_key + (index,))

    def absorb(self, other: "RandomStream") -> None:
        """Add a child's draw counts to this stream's tally."""
        self.tally.update(other.tally)


def child(stream: RandomStream, index: int) -> RandomStream:
    """Derive a child stream seeded from (parent seed, parent key, index)."""
    return stream.child(index)


def uniform_unit(stream: RandomStream) -> float:
    """Draw one uniform variate in [0, 1)."""
    stream.tally["uniform"] += 1
    return float(stream.generator.random())


def uniform_block(stream: RandomStream, size: int) -> np.ndarray:
    """Draw `size` uniform variates in [0, 1) as one array."""
    stream.tally["uniform"] += size
    return stream.generator.random(size)


def uniform_int(stream: RandomStream, lo: int, hi: int) -> int:
    """
    Draw a uniform integer in [lo, hi] without modulo bias.

    Raises:
        RangeError: If lo > hi
    """
    if lo > hi:
        raise RangeError(f"Empty integer range [{lo}, {hi}]")
    if lo == hi:
        return lo
    stream.tally["uniform"] += 1
    return lo + uniform_below(stream, hi - lo + 1, count=False)


def uniform_ints(stream: RandomStream, lo: int, hi: int, size: int) -> np.ndarray:
    """Draw `size` uniform integers in [lo, hi] as an int64 array."""
    if lo > hi:
        raise RangeError(f"Empty integer range [{lo}, {hi}]")
    stream.tally["uniform"] += size
    return stream.generator.integers(lo, hi, size=size, endpoint=True, dtype=np.int64)


def uniform_below(stream: RandomStream, bound: int, count: bool = True) -> int:
    """
    Draw a uniform integer in [0, bound) for bounds up to 2^128.

    Small bounds use numpy's unbiased bounded integers; larger bounds use
    rejection over concatenated 64-bit words.
    """
    if bound <= 0:
        raise RangeError(f"Bound must be positive, got {bound}")
    if bound > 1 << MAX_UNIFORM_BITS:
        raise CapacityError(f"Uniform bound exceeds 2^{MAX_UNIFORM_BITS}: {bound}")
    if count:
        stream.tally["uniform"] += 1
    if bound <= 1 << 63:
        return int(stream.generator.integers(0, bound))

    bits = (bound - 1).bit_length()
    words = (bits + 63) // 64
    mask = (1 << bits) - 1
    while True:
        value = 0
        draws = stream.generator.integers(0, MASK_64, size=words, endpoint=True, dtype=np.uint64)
        for word in draws.tolist():
            value = (value << 64) | word
        value &= mask
        if value < bound:
            return value
