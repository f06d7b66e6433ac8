"""
Empirical thresholds for the asymptotic bipartite formulas.

For a fixed m and F the oracle value is compared against the closed form for every
n in [m, n_max]; the threshold is the least n0 from which all tested n agree.
"""

import logging
from typing import Optional

from pydantic import BaseModel, Field

from config import OracleBudget, get_budget
from errors import DomainError
from formulas.turan import ex_forest_bipartite
from graphs.forest_spec import LinearForestSpec
from oracle.brute import brute_ex_bipartite, descriptor_keys

logger = logging.getLogger("Scan")


class ScanRow(BaseModel):
    n: int
    brute: int = Field(description="Oracle value ex(m, n; F)")
    formula: Optional[int] = Field(default=None, description="Closed-form value, None when out of regime")
    case_label: Optional[str] = None
    agree: bool
    extremal_match: Optional[bool] = Field(
        default=None, description="Every buildable formula descriptor is among the oracle's extremal graphs"
    )


class ScanReport(BaseModel):
    m: int
    spec: str
    n_max: int
    rows: list[ScanRow] = Field(default_factory=list)
    threshold: Optional[int] = Field(default=None, description="Least n0 with agreement for all tested n >= n0")


def threshold_scan(
    m: int,
    spec: LinearForestSpec,
    n_max: int,
    budget: Optional[OracleBudget] = None,
    workers: Optional[int] = None,
    progress: bool = False,
) -> ScanReport:
    """
    Oracle vs formula for n = m .. n_max.

    Raises:
        DomainError: n_max < m
        OracleBudgetError / BudgetExceededError: from the oracle
    """
    if n_max < m:
        raise DomainError(f"n_max must be >= m, got m={m}, n_max={n_max}")
    budget = budget or get_budget()
    report = ScanReport(m=m, spec=str(spec), n_max=n_max)
    for n in range(m, n_max + 1):
        brute = brute_ex_bipartite(m, n, spec, budget, workers, progress)
        try:
            result = ex_forest_bipartite(m, n, spec)
        except DomainError as e:
            logger.debug("n=%d: no formula (%s)", n, e)
            report.rows.append(ScanRow(n=n, brute=brute.max_edges, agree=False))
            continue
        expected = descriptor_keys(result, m, n)
        match = expected <= set(brute.extremal_keys) if expected else None
        agree = brute.max_edges == result.value
        report.rows.append(
            ScanRow(
                n=n, brute=brute.max_edges, formula=result.value, case_label=result.case_label,
                agree=agree, extremal_match=match,
            )
        )
        logger.info("m=%d n=%d %s: brute %d formula %d", m, n, spec, brute.max_edges, result.value)

    threshold = None
    for row in reversed(report.rows):
        if not row.agree:
            break
        threshold = row.n
    report.threshold = threshold
    return report
