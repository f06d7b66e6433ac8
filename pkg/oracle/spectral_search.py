"""
Extreme eigenvalues over all F-free graphs of a small order.

Bipartite mode maximises the spectral radius over every bipartition a + b = n;
general mode minimises the least eigenvalue over all simple graphs and, on the
way, compares the direct least eigenvalue of every bipartite graph it meets with
-lambda_max.
"""

import logging
from typing import Literal, Optional

from pydantic import BaseModel, Field
from tqdm import tqdm

from config import OracleBudget, get_budget
from errors import DomainError, OracleBudgetError
from formulas.turan import spectral_bound
from graphs.bipartite import BipartiteGraph
from graphs.canonical import canonical_key, canonical_key_general, key_hex
from graphs.forest_spec import LinearForestSpec
from graphs.general import GeneralGraph
from oracle.brute import enumerate_free_graphs
from spectral.power import spectral_radius

logger = logging.getLogger("SpectralSearch")


class SpectralSearchReport(BaseModel):
    mode: Literal["bipartite", "general"]
    n: int
    spec: str
    value: float = Field(description="max lambda (bipartite) or min lambda_min (general)")
    extremal_keys: list[str] = Field(default_factory=list, description="General canonical keys, sorted hex")
    graphs_evaluated: int = Field(default=0, description="Isomorphism classes whose spectrum was computed")
    bound: Optional[float] = Field(default=None, description="sqrt(p(n-p)) or its negative, when defined")
    symmetry_checked: int = Field(default=0, description="Bipartite graphs cross-checked in general mode")
    symmetry_violations: int = 0


def _bound(n: int, spec: LinearForestSpec) -> Optional[float]:
    try:
        return spectral_bound(n, spec)
    except DomainError:
        return None


def _bipartite_classes(n: int, spec: LinearForestSpec, embed_steps: int) -> dict[bytes, BipartiteGraph]:
    classes: dict[bytes, BipartiteGraph] = {}
    for a in range(1, n // 2 + 1):
        for g in enumerate_free_graphs(spec, sides=(a, n - a), embed_steps=embed_steps):
            classes.setdefault(canonical_key(g), g)
    return classes


def brute_spectral_max(
    n: int,
    spec: LinearForestSpec,
    bipartite_only: bool = True,
    budget: Optional[OracleBudget] = None,
    tol: Optional[float] = None,
    progress: bool = False,
) -> SpectralSearchReport:
    """
    Spectral extremum over F-free graphs of order n.

    Ties are decided within 4*tol; extremal graphs are reported by general canonical key
    so the same graph found under different bipartitions is listed once.

    Raises:
        DomainError: n < 2
        OracleBudgetError: n above the configured spectral order limit
    """
    budget = budget or get_budget()
    tol = tol or budget.spectral_tol
    tie = 4 * tol
    if n < 2:
        raise DomainError(f"spectral search needs n >= 2, got {n}")
    limit = budget.max_spectral_bipartite_order if bipartite_only else budget.max_spectral_general_order
    if n > limit:
        raise OracleBudgetError(f"order {n} exceeds the spectral search budget of {limit}")

    if bipartite_only:
        graphs: list = list(_bipartite_classes(n, spec, budget.embed_steps).values())
    else:
        seen: dict[bytes, GeneralGraph] = {}
        for g in enumerate_free_graphs(spec, order=n, embed_steps=budget.embed_steps):
            seen.setdefault(canonical_key_general(g), g)
        graphs = list(seen.values())

    values: list[float] = []
    checked = violations = 0
    for g in tqdm(graphs, desc="Spectra", unit=" graph", disable=None if progress else True):
        result = spectral_radius(g, tol)
        if bipartite_only:
            values.append(result.lambda_max)
            continue
        values.append(result.lambda_min)
        if g.bipartition() is not None:
            checked += 1
            if abs(result.lambda_min + result.lambda_max) > 2 * tol + 1e-12:
                violations += 1
                logger.warning("spectral symmetry broken on %s: %.12f vs %.12f", g.edges(), result.lambda_min, result.lambda_max)

    best = max(values) if bipartite_only else min(values)
    keys = set()
    for g, value in zip(graphs, values):
        if abs(value - best) <= tie:
            general = g.to_general() if isinstance(g, BipartiteGraph) else g
            keys.add(key_hex(canonical_key_general(general)))

    bound = _bound(n, spec)
    if bound is not None and not bipartite_only:
        bound = -bound
    logger.info("%s n=%d %s: %.9f over %d classes", "bipartite" if bipartite_only else "general", n, spec, best, len(graphs))
    return SpectralSearchReport(
        mode="bipartite" if bipartite_only else "general",
        n=n, spec=str(spec), value=best, extremal_keys=sorted(keys), graphs_evaluated=len(graphs),
        bound=bound, symmetry_checked=checked, symmetry_violations=violations,
    )
