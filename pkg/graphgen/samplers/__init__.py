"""
Random graph samplers for graphgen.

Erdos-Renyi, Chung-Lu, stochastic block and stochastic Kronecker models,
each with an O(n^2) coin-flip oracle and faster ball-drop or grass-hop paths.
"""

from graphgen.samplers.block_models import (
    BlockSpec,
    DegreeSequence,
    chung_lu_as_sbm,
    chung_lu_ball,
    chung_lu_grass,
    chung_lu_matrix,
    chung_lu_probability,
    degree_order,
    sbm_ball,
    sbm_grass,
)
from graphgen.samplers.edges import BallDropReport, EdgeList, concat, symmetrize
from graphgen.samplers.erdos_renyi import (
    ball_drop_er,
    ball_drop_er_complement,
    coin_flip_er,
    coin_flip_matrix,
    fixed_edge_er,
    grass_hop_er,
    grass_hop_er_rect,
)
from graphgen.samplers.kronecker import (
    MAX_POWER,
    Initiator,
    RegionSample,
    backward_map,
    coin_flip_kron,
    count_sampled_regions,
    expected_edge_count,
    grass_hop_kron,
    grass_hop_region,
    kronecker_power_dense,
    map_mult_to_kron,
    multtable,
    sample_regions,
    vectorize,
)

__all__ = [
    # Edge containers
    "EdgeList",
    "BallDropReport",
    "concat",
    "symmetrize",
    # Erdos-Renyi
    "coin_flip_matrix",
    "coin_flip_er",
    "ball_drop_er",
    "ball_drop_er_complement",
    "grass_hop_er_rect",
    "grass_hop_er",
    "fixed_edge_er",
    # Block models
    "DegreeSequence",
    "BlockSpec",
    "chung_lu_probability",
    "chung_lu_matrix",
    "chung_lu_as_sbm",
    "degree_order",
    "chung_lu_grass",
    "chung_lu_ball",
    "sbm_grass",
    "sbm_ball",
    # Kronecker
    "MAX_POWER",
    "Initiator",
    "RegionSample",
    "vectorize",
    "multtable",
    "grass_hop_region",
    "map_mult_to_kron",
    "backward_map",
    "kronecker_power_dense",
    "expected_edge_count",
    "sample_regions",
    "count_sampled_regions",
    "grass_hop_kron",
    "coin_flip_kron",
]
