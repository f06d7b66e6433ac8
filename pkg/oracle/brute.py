"""
Exhaustive Turán numbers for small host graphs.

Branch and bound over edge inclusion in lexicographic order, include branch first.
A branch is abandoned when adding the next edge creates F (containment is monotone)
or when even taking every undecided edge would stay below the incumbent. Ties with
the incumbent are explored, so every extremal labelled graph is reached and its
canonical key collected.

The tree is cut into a fixed set of prefixes (the first PREFIX_DEPTH edge decisions)
whatever the worker count; each prefix is searched independently from the same seed
and the results are merged by max value plus union of keys. Reports are therefore
identical for one or many workers.
"""

import logging
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable, Iterator, Literal, Optional, Union

from pydantic import BaseModel, Field
from tqdm import tqdm

from config import OracleBudget, get_budget
from constructions.families import build_family
from embedding.forest_embed import contains_forest
from errors import BudgetExceededError, CanonicalSizeError, DomainError, OracleBudgetError
from formulas.turan import FormulaResult, ex_forest_bipartite, ex_forest_general
from graphs.bipartite import BipartiteGraph
from graphs.canonical import canonical_key, canonical_key_general, key_hex
from graphs.forest_spec import LinearForestSpec
from graphs.general import GeneralGraph

logger = logging.getLogger("Oracle")

PREFIX_DEPTH = 3

OracleKind = Literal["bipartite", "general"]
AnyGraph = Union[BipartiteGraph, GeneralGraph]


class OracleReport(BaseModel):
    """Result of one exhaustive search; field order is the JSON order."""

    kind: OracleKind
    m: Optional[int] = Field(default=None, description="X side size (bipartite only)")
    n: int = Field(description="Y side size, or the order of a general host")
    spec: str
    max_edges: int = Field(ge=0, description="True extremal edge count")
    extremal_keys: list[str] = Field(default_factory=list, description="Sorted hex canonical keys of all extremal graphs")
    extremal_count: int = Field(default=0, description="Number of extremal graphs up to isomorphism")
    seed_edges: int = Field(default=0, description="Edge count of the construction used as first incumbent")
    nodes: int = Field(default=0, description="Search-tree nodes visited")
    leaves: int = Field(default=0, description="Complete F-free labelled graphs reached")
    elapsed: float = Field(default=0.0, exclude=True, description="Wall time in seconds (never serialized)")


@dataclass(frozen=True)
class _Problem:
    kind: OracleKind
    m: int
    n: int
    parts: tuple[int, ...]
    seed: int
    max_nodes: int
    embed_steps: int

    @property
    def order(self) -> int:
        return self.m + self.n if self.kind == "bipartite" else self.n

    def edge_order(self) -> list[tuple[int, int]]:
        if self.kind == "bipartite":
            return [(x, self.m + y) for x in range(self.m) for y in range(self.n)]
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)]

    def graph(self, masks: list[int]) -> AnyGraph:
        if self.kind == "bipartite":
            return BipartiteGraph(self.m, self.n, tuple(masks[x] >> self.m for x in range(self.m)))
        return GeneralGraph(self.n, tuple(masks))

    def key(self, g: AnyGraph) -> str:
        if isinstance(g, BipartiteGraph):
            return key_hex(canonical_key(g))
        return key_hex(canonical_key_general(g))


class _Host:
    """Adjacency view handed to the containment search without building a graph object."""

    __slots__ = ("order", "x_mask", "_masks")

    def __init__(self, order: int, x_mask: Optional[int], masks: list[int]):
        self.order = order
        self.x_mask = x_mask
        self._masks = tuple(masks)

    def adjacency_masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self._masks) // 2


@dataclass
class _TaskResult:
    best: int
    keys: set[str]
    nodes: int
    leaves: int
    exhausted: bool


class _NodeBudget(Exception):
    pass


def _search(
    problem: _Problem,
    prefix: tuple[bool, ...],
    visitor: Optional[Callable[[AnyGraph], None]] = None,
) -> _TaskResult:
    """Search the subtree below one fixed prefix of include/exclude decisions."""
    spec = LinearForestSpec(problem.parts)
    edges = problem.edge_order()
    order = problem.order
    x_mask = (1 << problem.m) - 1 if problem.kind == "bipartite" else None
    masks = [0] * order
    state = _TaskResult(best=problem.seed, keys=set(), nodes=0, leaves=0, exhausted=False)

    def free_with(u: int, v: int) -> bool:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        found = contains_forest(_Host(order, x_mask, masks), spec, problem.embed_steps)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return found is None

    def leaf(count: int) -> None:
        state.leaves += 1
        g = problem.graph(masks)
        if visitor is not None:
            visitor(g)
        if count > state.best:
            state.best = count
            state.keys = set()
        if count == state.best:
            state.keys.add(problem.key(g))

    def dfs(idx: int, count: int) -> None:
        state.nodes += 1
        if state.nodes > problem.max_nodes:
            raise _NodeBudget
        if count + len(edges) - idx < state.best:
            return
        if idx == len(edges):
            leaf(count)
            return
        u, v = edges[idx]
        if free_with(u, v):
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            dfs(idx + 1, count + 1)
            masks[u] &= ~(1 << v)
            masks[v] &= ~(1 << u)
        dfs(idx + 1, count)

    count = 0
    for idx, include in enumerate(prefix):
        if include:
            u, v = edges[idx]
            if not free_with(u, v):
                return state
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            count += 1
    try:
        dfs(len(prefix), count)
    except _NodeBudget:
        state.exhausted = True
    return state


def _run_task(args: tuple[_Problem, tuple[bool, ...]]) -> _TaskResult:
    return _search(*args)


def _prefixes(depth: int) -> list[tuple[bool, ...]]:
    out: list[tuple[bool, ...]] = [()]
    for _ in range(depth):
        out = [p + (choice,) for p in out for choice in (True, False)]
    return out


def _run(
    problem: _Problem,
    workers: int,
    progress: bool,
    visitor: Optional[Callable[[AnyGraph], None]],
) -> tuple[int, set[str], int, int, bool]:
    """
    Run every prefix task and merge the results.

    The node budget covers the whole call: the call is exhausted once the nodes summed
    over all tasks pass max_nodes. Each task also stops as soon as it alone passes it.
    """
    depth = min(PREFIX_DEPTH, len(problem.edge_order()))
    tasks = [(problem, prefix) for prefix in _prefixes(depth)]
    results: list[_TaskResult] = []
    with tqdm(total=len(tasks), desc="Oracle", unit=" prefix", disable=None if progress else True) as bar:
        if workers > 1 and visitor is None:
            with Pool(processes=workers) as pool:
                for result in pool.imap(_run_task, tasks):
                    results.append(result)
                    bar.update(1)
        else:
            for problem_, prefix in tasks:
                results.append(_search(problem_, prefix, visitor))
                bar.update(1)

    best = max(r.best for r in results)
    keys: set[str] = set()
    for r in results:
        if r.best == best:
            keys |= r.keys
    nodes = sum(r.nodes for r in results)
    leaves = sum(r.leaves for r in results)
    exhausted = any(r.exhausted for r in results) or nodes > problem.max_nodes
    return best, keys, nodes, leaves, exhausted


def _best_seed(candidates: list[AnyGraph], spec: LinearForestSpec, embed_steps: int) -> int:
    best = 0
    for g in candidates:
        if g.edge_count > best and contains_forest(g, spec, embed_steps) is None:
            best = g.edge_count
    return best


def descriptor_graphs(result: FormulaResult, m: int, n: int) -> list[BipartiteGraph]:
    """
    Build a result's bipartite extremal descriptors, oriented as (m, n).

    Descriptors whose graphs do not have that shape are skipped.
    """
    graphs = []
    for desc in result.extremal:
        try:
            g = build_family(desc)
        except DomainError:
            continue
        if not isinstance(g, BipartiteGraph):
            continue
        if (g.m, g.n) == (m, n):
            graphs.append(g)
        elif (g.n, g.m) == (m, n):
            graphs.append(g.transpose())
    return graphs


def descriptor_keys(result: FormulaResult, m: int, n: int) -> set[str]:
    """Canonical keys of descriptor_graphs(result, m, n)."""
    keys = set()
    for g in descriptor_graphs(result, m, n):
        try:
            keys.add(key_hex(canonical_key(g)))
        except CanonicalSizeError:
            continue
    return keys


def bipartite_seeds(m: int, n: int, spec: LinearForestSpec) -> list[BipartiteGraph]:
    """F-free candidates from the closed-form extremal families, oriented as (m, n)."""
    lo, hi = min(m, n), max(m, n)
    try:
        result = ex_forest_bipartite(lo, hi, spec)
    except DomainError:
        return []
    return descriptor_graphs(result, m, n)


def general_seeds(order: int, spec: LinearForestSpec) -> list[GeneralGraph]:
    try:
        result = ex_forest_general(order, spec)
    except DomainError:
        return []
    graphs = []
    for desc in result.extremal:
        try:
            g = build_family(desc)
        except DomainError:
            continue
        if isinstance(g, GeneralGraph) and g.order == order:
            graphs.append(g)
    return graphs


def _finish(report: OracleReport, exhausted: bool) -> OracleReport:
    if exhausted:
        raise BudgetExceededError(
            f"node budget exhausted after {report.nodes} nodes; best so far {report.max_edges}",
            partial=report,
        )
    logger.info(
        "%s %s: max %d edges, %d extremal, %d nodes in %.2fs",
        report.kind, report.spec, report.max_edges, report.extremal_count, report.nodes, report.elapsed,
    )
    return report


def brute_ex_bipartite(
    m: int,
    n: int,
    spec: LinearForestSpec,
    budget: Optional[OracleBudget] = None,
    workers: Optional[int] = None,
    progress: bool = False,
) -> OracleReport:
    """
    ex(m, n; F) and all extremal graphs up to isomorphism.

    Raises:
        DomainError: a side is empty
        OracleBudgetError: m*n above budget.max_cells
        BudgetExceededError: node budget ran out; `partial` holds the report so far
    """
    budget = budget or get_budget()
    if m < 1 or n < 1:
        raise DomainError(f"oracle sides must be >= 1, got ({m}, {n})")
    if m * n > budget.max_cells:
        raise OracleBudgetError(f"m*n = {m * n} exceeds the oracle budget of {budget.max_cells} cells")

    started = time.perf_counter()
    seed = _best_seed(bipartite_seeds(m, n, spec), spec, budget.embed_steps)
    logger.debug("(%d,%d) %s seeded at %d edges", m, n, spec, seed)
    problem = _Problem("bipartite", m, n, spec.parts, seed, budget.max_nodes, budget.embed_steps)
    best, keys, nodes, leaves, exhausted = _run(problem, workers or budget.workers, progress, None)
    report = OracleReport(
        kind="bipartite", m=m, n=n, spec=str(spec), max_edges=best, extremal_keys=sorted(keys),
        extremal_count=len(keys), seed_edges=seed, nodes=nodes, leaves=leaves,
        elapsed=time.perf_counter() - started,
    )
    return _finish(report, exhausted)


def brute_ex_general(
    n: int,
    spec: LinearForestSpec,
    budget: Optional[OracleBudget] = None,
    workers: Optional[int] = None,
    progress: bool = False,
    visitor: Optional[Callable[[AnyGraph], None]] = None,
) -> OracleReport:
    """
    ex(n, F) over all simple graphs of order n, keys over the full symmetric group.

    `visitor` is called on every complete F-free labelled graph the search reaches
    (this forces a single in-process worker).

    Raises:
        DomainError: n < 1
        OracleBudgetError: n above budget.max_general_order
        BudgetExceededError: node budget ran out
    """
    budget = budget or get_budget()
    if n < 1:
        raise DomainError(f"oracle order must be >= 1, got {n}")
    if n > budget.max_general_order:
        raise OracleBudgetError(f"order {n} exceeds the general oracle budget of {budget.max_general_order}")

    started = time.perf_counter()
    seed = _best_seed(general_seeds(n, spec), spec, budget.embed_steps)
    problem = _Problem("general", 0, n, spec.parts, seed, budget.max_nodes, budget.embed_steps)
    best, keys, nodes, leaves, exhausted = _run(problem, workers or budget.workers, progress, visitor)
    report = OracleReport(
        kind="general", n=n, spec=str(spec), max_edges=best, extremal_keys=sorted(keys),
        extremal_count=len(keys), seed_edges=seed, nodes=nodes, leaves=leaves,
        elapsed=time.perf_counter() - started,
    )
    return _finish(report, exhausted)


def naive_ex_bipartite(m: int, n: int, spec: LinearForestSpec, embed_steps: int = 100_000_000) -> OracleReport:
    """Reference oracle: test every one of the 2^(mn) labelled graphs."""
    if m * n > 20:
        raise OracleBudgetError(f"naive enumeration is limited to m*n <= 20, got {m * n}")
    started = time.perf_counter()
    best = 0
    keys: set[str] = set()
    full = 1 << n
    total = 1 << (m * n)
    for code in range(total):
        rows = tuple((code >> (x * n)) % full for x in range(m))
        g = BipartiteGraph(m, n, rows)
        if contains_forest(g, spec, embed_steps) is not None:
            continue
        if g.edge_count > best:
            best, keys = g.edge_count, set()
        if g.edge_count == best:
            keys.add(key_hex(canonical_key(g)))
    return OracleReport(
        kind="bipartite", m=m, n=n, spec=str(spec), max_edges=best, extremal_keys=sorted(keys),
        extremal_count=len(keys), nodes=total, leaves=total, elapsed=time.perf_counter() - started,
    )


def enumerate_free_graphs(
    spec: LinearForestSpec,
    *,
    sides: Optional[tuple[int, int]] = None,
    order: Optional[int] = None,
    embed_steps: int = 100_000_000,
) -> Iterator[AnyGraph]:
    """
    Yield every F-free labelled graph on the given vertex set.

    Pass `sides=(m, n)` for bipartite graphs or `order=n` for simple graphs.
    """
    if (sides is None) == (order is None):
        raise ValueError("pass exactly one of sides= or order=")
    if sides is not None:
        problem = _Problem("bipartite", sides[0], sides[1], spec.parts, 0, 1, embed_steps)
        x_mask: Optional[int] = (1 << sides[0]) - 1
    else:
        problem = _Problem("general", 0, order, spec.parts, 0, 1, embed_steps)
        x_mask = None
    edges = problem.edge_order()
    size = problem.order
    masks = [0] * size

    def walk(idx: int) -> Iterator[AnyGraph]:
        if idx == len(edges):
            yield problem.graph(masks)
            return
        u, v = edges[idx]
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        if contains_forest(_Host(size, x_mask, masks), spec, embed_steps) is None:
            yield from walk(idx + 1)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        yield from walk(idx + 1)

    if contains_forest(_Host(size, x_mask, masks), spec, embed_steps) is None:
        yield from walk(0)

