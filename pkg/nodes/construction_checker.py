"""
Construction checker node

Builds every extremal descriptor the formulas return for small hosts and checks
that it has the claimed shape and edge count and does not contain F.
"""

import logging

from constructions.families import build_family
from embedding.forest_embed import contains_forest
from errors import DomainError
from formulas.turan import FormulaResult, ex_forest_bipartite, ex_forest_general
from graphs.bipartite import BipartiteGraph
from graphs.forest_spec import LinearForestSpec, parse_spec
from nodes.common import make_row
from state import VerifyState

logger = logging.getLogger("ConstructionCheck")


def _check_descriptors(result: FormulaResult, spec: LinearForestSpec, shape: tuple, label: str, embed_steps: int) -> list:
    rows = []
    for desc in result.extremal:
        try:
            g = build_family(desc)
        except DomainError as e:
            rows.append(make_row(f"{label} {desc}", "buildable", str(e), False))
            continue
        actual = (g.m, g.n) if isinstance(g, BipartiteGraph) else (g.order,)
        if isinstance(g, BipartiteGraph) and actual != shape and actual[::-1] == shape:
            actual = shape
        problems = []
        if actual != shape:
            problems.append(f"shape {actual}")
        if g.edge_count != result.value:
            problems.append(f"{g.edge_count} edges")
        if contains_forest(g, spec, embed_steps) is not None:
            problems.append(f"contains {spec}")
        observed = ", ".join(problems) if problems else f"{g.edge_count} edges, {spec}-free"
        rows.append(make_row(f"{label} {desc}", f"{result.value} edges, {spec}-free", observed, not problems))
    return rows


def construction_checker(state: VerifyState) -> VerifyState:
    """
    Construction checker node.

    Args:
        state: VerifyState with grid keys specs, max_order and general_max_order

    Returns:
        Updated state with one row per descriptor built
    """
    grid = state["grid"]
    max_order = int(grid.get("max_order", 20))
    general_max = int(grid.get("general_max_order", 12))
    steps = state["budget"].embed_steps
    rows = list(state.get("rows") or [])
    for text in grid.get("specs", []):
        spec = parse_spec(str(text))
        for m in range(1, max_order):
            for n in range(m, max_order - m + 1):
                try:
                    result = ex_forest_bipartite(m, n, spec)
                except DomainError:
                    continue
                rows.extend(_check_descriptors(result, spec, (m, n), f"({m},{n}) {result.case_label}", steps))
        for n in range(spec.p + 2, general_max + 1):
            try:
                result = ex_forest_general(n, spec)
            except DomainError:
                break
            rows.extend(_check_descriptors(result, spec, (n,), f"n={n} {result.case_label}", steps))
    logger.info("built and checked %d descriptors", len(rows))
    return {**state, "rows": rows}
