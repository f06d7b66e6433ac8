"""
Forest checker node

Runs a threshold scan for each (spec, m, n_max) entry of the grid. The linear forest
formulas are asymptotic, so only the largest n of each scan can fail; the empirical
threshold goes into the notes.
"""

import logging

from errors import BudgetExceededError, OracleBudgetError
from graphs.forest_spec import parse_spec
from nodes.common import budget_row, make_row, mark_asymptotic
from oracle.threshold import threshold_scan
from state import VerifyState

logger = logging.getLogger("ForestCheck")


def forest_checker(state: VerifyState) -> VerifyState:
    """
    Forest checker node.

    Args:
        state: VerifyState with grid key scans = [{spec, m, n_max}, ...]; a top-level
            n_max overrides every scan

    Returns:
        Updated state with one row per scanned n and one note per scan
    """
    rows = list(state.get("rows") or [])
    notes = list(state.get("notes") or [])
    for entry in state["grid"].get("scans", []):
        spec = parse_spec(str(entry["spec"]))
        m = int(entry["m"])
        n_max = int(state["grid"].get("n_max", entry["n_max"]))
        try:
            scan = threshold_scan(m, spec, n_max, state["budget"], state["workers"], state["progress"])
        except (BudgetExceededError, OracleBudgetError) as e:
            rows.append(budget_row(f"m={m} F={spec}", e))
            continue

        series = []
        for row in scan.rows:
            ok = row.agree and row.extremal_match is not False
            note = row.case_label
            if row.agree and row.extremal_match is False:
                note = f"{row.case_label}; formula extremal graph not among oracle extremal graphs"
            series.append(make_row(f"m={m} n={row.n} F={spec}", row.formula, row.brute, ok, note))
        series, note = mark_asymptotic(series, f"m={m} F={spec}", [row.n for row in scan.rows])
        rows.extend(series)
        notes.append(note)
        logger.info(note)
    return {**state, "rows": rows, "notes": notes}
