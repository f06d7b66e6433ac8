"""
VerifyState schema for the `verify` workflow.

The planner fills in the parameter grid and picks a checker; the checker appends
one VerifyRow per instance; the reporter folds everything into a VerifyReport.
"""

from typing import Any, Optional, TypedDict

from pydantic import BaseModel, Field

from config import OracleBudget


class VerifyRow(BaseModel):
    """One checked instance."""

    params: str = Field(description="Instance parameters, e.g. 'm=3 n=5 k=3'")
    expected: str = Field(description="Value or property the theorem claims")
    observed: str = Field(description="What the oracle / computation produced")
    ok: bool = Field(description="The claim holds at this instance")
    fatal: bool = Field(description="Counts as a verification failure")
    note: Optional[str] = Field(default=None, description="Remark, e.g. extra extremal graphs")


class VerifyReport(BaseModel):
    theorem: str
    grid: dict[str, Any] = Field(default_factory=dict, description="Effective parameter grid")
    summary: str = Field(default="", description="'all agree' or the first failing instance")
    checked: int = 0
    failures: int = 0
    rows: list[VerifyRow] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0


class VerifyState(TypedDict):
    """
    Shared state of one verification run.

    All fields except theorem are filled progressively by the nodes.
    """

    # Theorem id as typed on the command line, e.g. 'thm1.2' or 'lemma2.1'
    theorem: str

    # Grid overrides from CLI flags; merged over data/verify_grids.json by the planner
    overrides: dict[str, Any]

    # Effective parameter grid for this theorem
    grid: dict[str, Any]

    # Limits for every oracle call made by the checker
    budget: OracleBudget

    # Worker processes for oracle searches
    workers: int

    # Show tqdm bars on stderr
    progress: bool

    # Node chosen by the planner: 'path_checker', 'forest_checker', ...
    checker: Optional[str]

    # Checked instances, appended by the checker
    rows: list[VerifyRow]

    # Threshold observations and other remarks
    notes: list[str]

    # Final report built by the reporter
    report: Optional[VerifyReport]
