"""
Exhaustive search for vertex-disjoint paths P_{k_1}, ..., P_{k_l} in a host graph.

Hosts are BipartiteGraph or GeneralGraph; the search only needs global adjacency
bitmasks and, for bipartite hosts, the X-side mask used for per-side pruning.
Parts are embedded longest first; each undirected path is produced once (first
vertex < last vertex) and equal parts are embedded in increasing order of their
smallest vertex.
"""

import logging
from typing import Iterable, Iterator, Optional, Union

from pydantic import BaseModel, Field

from errors import EmbeddingBudgetExceeded
from graphs.bipartite import BipartiteGraph
from graphs.forest_spec import LinearForestSpec
from graphs.general import GeneralGraph

logger = logging.getLogger("Embed")

Host = Union[BipartiteGraph, GeneralGraph]

DEFAULT_STEP_BUDGET = 100_000_000


class EmbeddingCertificate(BaseModel):
    """Vertex-disjoint paths witnessing F ⊆ G, one per part in the spec's order."""

    paths: list[list[int]] = Field(description="Global vertex indices of each path, in spec order")

    def render(self, g: Host, base: int = 1) -> list[str]:
        return ["-".join(g.label(v, base) for v in path) for path in self.paths]


class _Steps:
    __slots__ = ("used", "limit")

    def __init__(self, limit: int):
        self.used = 0
        self.limit = limit

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise EmbeddingBudgetExceeded(self.used)


def _to_mask(vertices: Union[int, Iterable[int], None]) -> int:
    if vertices is None:
        return 0
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _paths(adj: tuple[int, ...], k: int, free: int, steps: _Steps, min_low: int = -1) -> Iterator[list[int]]:
    """
    Every path on exactly k vertices inside `free`, each undirected path once.

    Paths whose smallest vertex is <= min_low are skipped.
    """
    if min_low >= 0:
        free &= ~((1 << (min_low + 1)) - 1)
    if k == 1:
        for v in _iter_bits(free):
            steps.tick()
            yield [v]
        return

    path: list[int] = []

    def extend(last: int, used: int) -> Iterator[list[int]]:
        if len(path) == k:
            if path[0] < path[-1]:
                yield list(path)
            return
        for v in _iter_bits(adj[last] & free & ~used):
            steps.tick()
            path.append(v)
            yield from extend(v, used | (1 << v))
            path.pop()

    for start in _iter_bits(free):
        if not adj[start] & free:
            continue
        path.append(start)
        yield from extend(start, 1 << start)
        path.pop()


def find_path(
    g: Host,
    k: int,
    forbidden: Union[int, Iterable[int], None] = None,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> Optional[list[int]]:
    """
    Find a path on exactly k vertices avoiding `forbidden` (bitmask or vertex iterable).

    Returns:
        Global vertex sequence, or None when no such path exists

    Raises:
        EmbeddingBudgetExceeded: more than step_budget extensions were tried
    """
    if k < 1:
        raise ValueError(f"path order must be >= 1, got {k}")
    free = ((1 << g.order) - 1) & ~_to_mask(forbidden)
    if free.bit_count() < k:
        return None
    return next(_paths(g.adjacency_masks(), k, free, _Steps(step_budget)), None)


def contains_forest(
    g: Host,
    spec: LinearForestSpec,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> Optional[EmbeddingCertificate]:
    """
    Decide whether g contains the linear forest `spec` as a (not necessarily induced) subgraph.

    Returns:
        EmbeddingCertificate with one path per part (spec order), or None if g is F-free

    Raises:
        EmbeddingBudgetExceeded: more than step_budget extensions were tried
    """
    parts = spec.parts
    adj = g.adjacency_masks()
    everything = (1 << g.order) - 1
    x_mask = g.x_mask
    steps = _Steps(step_budget)

    # remaining[i] = (total order, per-side floor demand) of parts i..l-1
    remaining = []
    for i in range(len(parts)):
        tail = parts[i:]
        remaining.append((sum(tail), sum(k // 2 for k in tail)))

    failed: set[tuple[int, int, int]] = set()
    chosen: list[list[int]] = []

    def feasible(i: int, free: int) -> bool:
        order, half = remaining[i]
        if free.bit_count() < order:
            return False
        if x_mask is not None:
            free_x = (free & x_mask).bit_count()
            free_y = free.bit_count() - free_x
            if free_x < half or free_y < half:
                return False
        return True

    def solve(i: int, free: int, min_low: int) -> bool:
        if i == len(parts):
            return True
        if not feasible(i, free):
            return False
        memo = (i, free, min_low)
        if memo in failed:
            return False
        same_next = i + 1 < len(parts) and parts[i + 1] == parts[i]
        for path in _paths(adj, parts[i], free, steps, min_low):
            used = 0
            for v in path:
                used |= 1 << v
            chosen.append(path)
            if solve(i + 1, free & ~used, min(path) if same_next else -1):
                return True
            chosen.pop()
        failed.add(memo)
        return False

    if solve(0, everything, -1):
        logger.debug("found %s in graph with %d edges after %d steps", spec, g.edge_count, steps.used)
        return EmbeddingCertificate(paths=[list(p) for p in chosen])
    return None


def verify_certificate(g: Host, spec: LinearForestSpec, cert: EmbeddingCertificate) -> bool:
    """True iff cert lists vertex-disjoint paths of the spec's orders, in order, present in g."""
    if len(cert.paths) != spec.ell:
        return False
    seen: set[int] = set()
    for path, k in zip(cert.paths, spec.parts):
        if len(path) != k:
            return False
        for v in path:
            if not 0 <= v < g.order or v in seen:
                return False
            seen.add(v)
        for u, v in zip(path, path[1:]):
            if not g.neighbors(u) >> v & 1:
                return False
    return True
