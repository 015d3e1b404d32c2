"""
Combinatorics for graphgen.

Counting, enumeration and unranking of non-decreasing sequences, multiset
permutations and combinations, plus base-n Morton codes.
"""

from graphgen.combinat.combinations import unrank_combination
from graphgen.combinat.counting import (
    MAX_COUNT,
    MAX_RANK,
    binomial,
    checked,
    count_regions,
    count_regions_symmetric,
)
from graphgen.combinat.morton import morton_decode, morton_encode, multiindex_to_linear
from graphgen.combinat.multiset import (
    MultisetCounter,
    counter_to_ndseq,
    ndseq_to_counter,
    num_multiset_permutations,
    prefix_counts,
    rank_multiset,
    unrank_multiset,
)
from graphgen.combinat.sequences import (
    SENTINEL,
    NDSequence,
    is_sentinel,
    iter_regions,
    next_region,
    regions,
    validate_ndseq,
)

__all__ = [
    # Counting
    "MAX_COUNT",
    "MAX_RANK",
    "binomial",
    "checked",
    "count_regions",
    "count_regions_symmetric",
    # Regions
    "SENTINEL",
    "NDSequence",
    "is_sentinel",
    "iter_regions",
    "next_region",
    "regions",
    "validate_ndseq",
    # Multisets
    "MultisetCounter",
    "counter_to_ndseq",
    "ndseq_to_counter",
    "num_multiset_permutations",
    "prefix_counts",
    "rank_multiset",
    "unrank_multiset",
    # Combinations
    "unrank_combination",
    # Morton codes
    "morton_decode",
    "morton_encode",
    "multiindex_to_linear",
]
