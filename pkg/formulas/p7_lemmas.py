"""
Numerical checks of the two P_7 inequalities used in the k_l = 7 case.

    ex(n1, m1; P_7) <= p*n1 + m1                 for m1 <= 2p
    ex(n1, m1; P_7) <= p(n1 - 2) + m - p + m1    for m1 <= m - p, m >= 3p + 1
"""

import logging
from typing import Callable, Optional

from pydantic import BaseModel, Field

from errors import DomainError
from formulas.turan import ex_path_bipartite_oriented

logger = logging.getLogger("Lemmas")


class LemmaReport(BaseModel):
    """Outcome of one inequality sweep."""

    lemma: str = Field(description="Which inequality was checked")
    p: int
    m: Optional[int] = Field(default=None, description="Host side size (second inequality only)")
    checked: int = Field(default=0, description="Number of (n1, m1) pairs evaluated")
    violations: list[tuple[int, int]] = Field(default_factory=list)
    equality: list[tuple[int, int]] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _sweep(
    lemma: str,
    p: int,
    m: Optional[int],
    n1_limit: int,
    m1_limit: int,
    bound: Callable[[int, int], int],
) -> LemmaReport:
    report = LemmaReport(lemma=lemma, p=p, m=m)
    for n1 in range(n1_limit + 1):
        for m1 in range(m1_limit + 1):
            value = ex_path_bipartite_oriented(n1, m1, 7).value
            rhs = bound(n1, m1)
            report.checked += 1
            if value > rhs:
                report.violations.append((n1, m1))
            elif value == rhs:
                report.equality.append((n1, m1))
    logger.info(
        "%s p=%d m=%s: %d pairs, %d violations, equality at %s",
        lemma, p, m, report.checked, len(report.violations), report.equality,
    )
    return report


def check_lemma_p7_first(p: int, limit: int = 12) -> LemmaReport:
    """
    ex(n1, m1; P_7) <= p*n1 + m1 over 0 <= n1 <= limit, 0 <= m1 <= min(2p, limit).

    Raises:
        DomainError: p < 3
    """
    if p < 3:
        raise DomainError(f"the P_7 inequalities need p >= 3, got p={p}")
    return _sweep("lemma2.1", p, None, limit, min(2 * p, limit), lambda n1, m1: p * n1 + m1)


def check_lemma_p7_second(p: int, m: int, limit: int = 12) -> LemmaReport:
    """
    ex(n1, m1; P_7) <= p(n1 - 2) + m - p + m1 over 0 <= n1 <= limit, 0 <= m1 <= min(m - p, limit).

    Raises:
        DomainError: p < 3 or m < 3p + 1
    """
    if p < 3:
        raise DomainError(f"the P_7 inequalities need p >= 3, got p={p}")
    if m < 3 * p + 1:
        raise DomainError(f"the second P_7 inequality needs m >= 3p+1 = {3 * p + 1}, got m={m}")
    return _sweep(
        "lemma2.2", p, m, limit, min(m - p, limit), lambda n1, m1: p * (n1 - 2) + m - p + m1,
    )


def check_p7_lemmas(p: int, m: Optional[int] = None, limit: int = 12) -> list[LemmaReport]:
    """Run both sweeps; m defaults to the smallest admissible value 3p + 1."""
    if m is None:
        m = 3 * p + 1
    return [check_lemma_p7_first(p, limit), check_lemma_p7_second(p, m, limit)]
