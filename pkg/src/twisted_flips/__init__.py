"""Maximal plane subgraphs of the twisted graph T_n and flip paths between them."""

from .constructive import (
    DegreeSignature,
    PairMeasure,
    degree_signature,
    fixed_edge_flip_path,
    matching_preserving_path,
    pair_measure,
)
from .core import (
    Edge,
    EdgeSet,
    MaxPlaneSubgraph,
    complete_to_maximal,
    crosses,
    enumerate_maximal_plane,
    is_maximal_plane,
    is_plane,
    make_edge,
)
from .flips import (
    ExchangeMove,
    FlipGraph,
    FlipPath,
    bfs_path,
    build_flip_graph,
    exchange_neighbors,
    is_connected,
)
from .matchings import (
    MatchingGraph,
    PlanePerfectMatching,
    build_matching_graph,
    enumerate_plane_perfect_matchings,
    matching_path,
    matchings_adjacent,
    perfect_matchings_of,
)

__all__ = [name for name in dir() if not name.startswith("_")]
