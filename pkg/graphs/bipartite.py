"""
Labeled bipartite graphs G = (X, Y; E) with |X| = m and |Y| = n.

Adjacency is stored one-sided: row i is a bitmask over Y giving the neighbours of
x_i. Vertices also have global indices (x_i -> i, y_j -> m + j) which is what the
embedding search and the spectral routines work with.
"""

from dataclasses import dataclass, field
from typing import Iterable

from errors import GraphConstructionError


@dataclass(frozen=True)
class BipartiteGraph:
    """Immutable bipartite graph; rows[i] is the Y-neighbourhood bitmask of x_i."""

    m: int
    n: int
    rows: tuple[int, ...]
    _cols: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise GraphConstructionError(f"side sizes must be non-negative, got ({self.m}, {self.n})")
        if len(self.rows) != self.m:
            raise GraphConstructionError(f"expected {self.m} rows, got {len(self.rows)}")
        limit = 1 << self.n
        cols = [0] * self.n
        for i, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise GraphConstructionError(f"row {i} has bits outside Y (n={self.n})")
            bits = row
            while bits:
                low = bits & -bits
                cols[low.bit_length() - 1] |= 1 << i
                bits ^= low
        object.__setattr__(self, "_cols", tuple(cols))

    @classmethod
    def empty(cls, m: int, n: int) -> "BipartiteGraph":
        return cls(m, n, (0,) * m)

    @property
    def order(self) -> int:
        return self.m + self.n

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    @property
    def x_mask(self) -> int:
        """Global-index bitmask of the X side."""
        return (1 << self.m) - 1

    def has_edge(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def degree_x(self, x: int) -> int:
        return self.rows[x].bit_count()

    def degree_y(self, y: int) -> int:
        return self._cols[y].bit_count()

    def degree(self, v: int) -> int:
        """Degree of global vertex v."""
        if v < self.m:
            return self.degree_x(v)
        return self.degree_y(v - self.m)

    def max_degree(self) -> int:
        if self.order == 0:
            return 0
        return max(self.degree(v) for v in range(self.order))

    def neighbors(self, v: int) -> int:
        """Global-index bitmask of the neighbours of global vertex v."""
        if v < self.m:
            return self.rows[v] << self.m
        return self._cols[v - self.m]

    def adjacency_masks(self) -> tuple[int, ...]:
        return tuple(self.neighbors(v) for v in range(self.order))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (x-index, y-index), sorted lexicographically."""
        return [(x, y) for x in range(self.m) for y in range(self.n) if self.rows[x] >> y & 1]

    def with_edge(self, x: int, y: int) -> "BipartiteGraph":
        rows = list(self.rows)
        rows[x] |= 1 << y
        return BipartiteGraph(self.m, self.n, tuple(rows))

    def transpose(self) -> "BipartiteGraph":
        """Swap the roles of X and Y."""
        return BipartiteGraph(self.n, self.m, self._cols)

    def to_general(self):
        """Underlying simple graph with X vertices first, then Y."""
        from graphs.general import GeneralGraph

        return GeneralGraph(self.order, self.adjacency_masks())

    def label(self, v: int, base: int = 0) -> str:
        """Human label of global vertex v, e.g. x0 / y2 (base=1 gives x1 / y3)."""
        if v < self.m:
            return f"x{v + base}"
        return f"y{v - self.m + base}"


def build_bipartite(m: int, n: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    """
    Build a bipartite graph from (x-index, y-index) pairs.

    Duplicate pairs collapse to a single edge.

    Raises:
        GraphConstructionError: a pair has an index outside its side
    """
    if m < 0 or n < 0:
        raise GraphConstructionError(f"side sizes must be non-negative, got ({m}, {n})")
    rows = [0] * m
    for x, y in edges:
        if not (0 <= x < m and 0 <= y < n):
            raise GraphConstructionError(f"edge ({x}, {y}) out of range for sides ({m}, {n})")
        rows[x] |= 1 << y
    return BipartiteGraph(m, n, tuple(rows))


def disjoint_union(g: BipartiteGraph, h: BipartiteGraph) -> BipartiteGraph:
    """G ∪ H: g's X-vertices first on X, g's Y-vertices first on Y."""
    rows = tuple(g.rows) + tuple(row << g.n for row in h.rows)
    return BipartiteGraph(g.m + h.m, g.n + h.n, rows)
