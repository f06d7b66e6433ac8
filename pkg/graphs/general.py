"""
Labeled simple graphs on vertices 0..order-1, stored as symmetric neighbourhood bitmasks.
"""

from dataclasses import dataclass
from typing import Iterable, Optional

import networkx as nx

from errors import GraphConstructionError


@dataclass(frozen=True)
class GeneralGraph:
    """Immutable simple graph; masks[v] is the neighbourhood bitmask of v."""

    order: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0 or len(self.masks) != self.order:
            raise GraphConstructionError(f"expected {self.order} adjacency masks, got {len(self.masks)}")
        for v, mask in enumerate(self.masks):
            if mask >> v & 1:
                raise GraphConstructionError(f"loop at vertex {v}")
            if mask >> self.order:
                raise GraphConstructionError(f"vertex {v} has neighbours outside 0..{self.order - 1}")
            bits = mask
            while bits:
                low = bits & -bits
                u = low.bit_length() - 1
                if not self.masks[u] >> v & 1:
                    raise GraphConstructionError(f"adjacency not symmetric between {v} and {u}")
                bits ^= low

    @classmethod
    def empty(cls, order: int) -> "GeneralGraph":
        return cls(order, (0,) * order)

    @classmethod
    def complete(cls, order: int) -> "GeneralGraph":
        full = (1 << order) - 1
        return cls(order, tuple(full ^ (1 << v) for v in range(order)))

    @property
    def x_mask(self) -> Optional[int]:
        """General graphs have no side structure."""
        return None

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.masks) // 2

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def max_degree(self) -> int:
        return max((mask.bit_count() for mask in self.masks), default=0)

    def neighbors(self, v: int) -> int:
        return self.masks[v]

    def adjacency_masks(self) -> tuple[int, ...]:
        return self.masks

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in range(u + 1, self.order) if self.masks[u] >> v & 1]

    def with_edge(self, u: int, v: int) -> "GeneralGraph":
        masks = list(self.masks)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        return GeneralGraph(self.order, tuple(masks))

    def complement(self) -> "GeneralGraph":
        full = (1 << self.order) - 1
        return GeneralGraph(self.order, tuple(full ^ mask ^ (1 << v) for v, mask in enumerate(self.masks)))

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.order):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                bits = frontier
                while bits:
                    low = bits & -bits
                    nxt |= self.masks[low.bit_length() - 1]
                    bits ^= low
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        g.add_edges_from(self.edges())
        return g

    def bipartition(self) -> Optional[tuple[list[int], list[int]]]:
        """A 2-colouring as (colour-1 side, colour-0 side), or None if not bipartite."""
        g = self.to_networkx()
        if not nx.is_bipartite(g):
            return None
        # colour 1 holds the least vertex of each non-trivial component; isolates get 0
        color = nx.bipartite.color(g)
        left = [v for v in range(self.order) if color[v] == 1]
        right = [v for v in range(self.order) if color[v] == 0]
        return left, right

    def label(self, v: int, base: int = 0) -> str:
        return str(v + base)


def build_general(order: int, edges: Iterable[tuple[int, int]]) -> GeneralGraph:
    """
    Build a simple graph from vertex pairs; duplicates collapse.

    Raises:
        GraphConstructionError: loop or index out of range
    """
    if order < 0:
        raise GraphConstructionError(f"order must be non-negative, got {order}")
    masks = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphConstructionError(f"edge ({u}, {v}) out of range for order {order}")
        if u == v:
            raise GraphConstructionError(f"loop at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return GeneralGraph(order, tuple(masks))


def disjoint_union_general(g: GeneralGraph, h: GeneralGraph) -> GeneralGraph:
    shifted = tuple(mask << g.order for mask in h.masks)
    return GeneralGraph(g.order + h.order, tuple(g.masks) + shifted)


def join(g: GeneralGraph, h: GeneralGraph) -> GeneralGraph:
    """G ∇ H: disjoint union plus every edge between V(g) and V(h)."""
    g_all = (1 << g.order) - 1
    h_all = ((1 << h.order) - 1) << g.order
    masks = [mask | h_all for mask in g.masks]
    masks += [(mask << g.order) | g_all for mask in h.masks]
    return GeneralGraph(g.order + h.order, tuple(masks))
