"""
Reporter node

Folds the checker's rows and notes into the final VerifyReport.
"""

import logging

from state import VerifyReport, VerifyState

logger = logging.getLogger("Reporter")


def reporter(state: VerifyState) -> VerifyState:
    rows = list(state.get("rows") or [])
    first = next((row for row in rows if row.fatal), None)
    report = VerifyReport(
        theorem=state["theorem"],
        grid=dict(state.get("grid") or {}),
        summary="all agree" if first is None else f"first disagreement: {first.params}",
        checked=len(rows),
        failures=sum(1 for row in rows if row.fatal),
        rows=rows,
        notes=list(state.get("notes") or []),
    )
    if report.passed:
        logger.info("%s: all %d instances pass", report.theorem, report.checked)
    else:
        logger.warning("%s: %d of %d instances fail", report.theorem, report.failures, report.checked)
    return {**state, "report": report}
