"""
Extremal graph families, parameterized as the theorems state them.
"""

from constructions.families import (
    FAMILY_ALIASES,
    FamilyDescriptor,
    bipartite_matching,
    build_family,
    c4_double_star,
    complete_bipartite,
    double_block_same_side,
    empty_bipartite,
    kpn_plus_isolated,
    matching_graph,
    nikiforov_graph,
    pendant_graph,
    resolve_family,
    two_block,
    z_graph,
    z_graph_plus_isolated,
)

__all__ = [
    "FAMILY_ALIASES",
    "FamilyDescriptor",
    "bipartite_matching",
    "build_family",
    "c4_double_star",
    "complete_bipartite",
    "double_block_same_side",
    "empty_bipartite",
    "kpn_plus_isolated",
    "matching_graph",
    "nikiforov_graph",
    "pendant_graph",
    "resolve_family",
    "two_block",
    "z_graph",
    "z_graph_plus_isolated",
]
