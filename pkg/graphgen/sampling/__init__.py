"""
Sampling primitives for graphgen.

Seeded uniform randomness and the geometric, binomial and weighted discrete
distributions every sampler consumes.
"""

from graphgen.sampling.distributions import (
    GAP_BATCH,
    MAX_GAP,
    geometric_gap_block,
    geometric_gaps,
    geometric_landings,
    sample_binomial,
    sample_discrete,
    sample_geometric,
)
from graphgen.sampling.parallel import map_with_children
from graphgen.sampling.stream import (
    GENERATOR_VERSION,
    MASK_64,
    Probability,
    RandomStream,
    child,
    parse_seed,
    uniform_below,
    uniform_block,
    uniform_int,
    uniform_ints,
    uniform_unit,
)

__all__ = [
    # Streams
    "GENERATOR_VERSION",
    "MASK_64",
    "Probability",
    "RandomStream",
    "child",
    "parse_seed",
    "uniform_unit",
    "uniform_block",
    "uniform_int",
    "uniform_ints",
    "uniform_below",
    # Distributions
    "GAP_BATCH",
    "MAX_GAP",
    "geometric_gap_block",
    "geometric_gaps",
    "geometric_landings",
    "sample_geometric",
    "sample_binomial",
    "sample_discrete",
    # Parallelism
    "map_with_children",
]
