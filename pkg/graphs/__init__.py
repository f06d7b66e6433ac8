"""
Graph-core: representations, construction primitives, canonical forms and I/O.
"""

from graphs.bipartite import BipartiteGraph, build_bipartite, disjoint_union
from graphs.forest_spec import LinearForestSpec, parse_spec
from graphs.general import GeneralGraph, build_general, join

__all__ = [
    "BipartiteGraph",
    "GeneralGraph",
    "LinearForestSpec",
    "build_bipartite",
    "build_general",
    "disjoint_union",
    "join",
    "parse_spec",
]
