"""
General checker node

thm1.1: the oracle's ex(n, P_k) never exceeds floor((k-2)n/2) for k <= n <= n_max.
thm1.4: the oracle's ex(n, F) against C(p,2) + p(n-p) + c for n = p+2 .. n_max;
asymptotic, so only the largest n of each spec can fail.
"""

import logging

from errors import BudgetExceededError, DomainError, OracleBudgetError
from formulas.turan import ex_forest_general, ex_path_general
from graphs.forest_spec import LinearForestSpec, parse_spec
from nodes.common import budget_row, make_row, mark_asymptotic
from oracle.brute import brute_ex_general
from state import VerifyState

logger = logging.getLogger("GeneralCheck")


def _check_erdos_gallai(state: VerifyState) -> list:
    grid = state["grid"]
    n_max = int(grid.get("n_max", 6))
    rows = []
    for k in [int(k) for k in grid.get("k", range(2, 7))]:
        for n in range(k, n_max + 1):
            bound = ex_path_general(n, k).value
            try:
                report = brute_ex_general(n, LinearForestSpec.of(k), state["budget"], state["workers"], state["progress"])
            except (BudgetExceededError, OracleBudgetError) as e:
                rows.append(budget_row(f"n={n} k={k}", e))
                continue
            rows.append(make_row(f"n={n} k={k}", f"<= {bound}", report.max_edges, report.max_edges <= bound))
    return rows


def _check_forest_general(state: VerifyState) -> tuple[list, list]:
    grid = state["grid"]
    n_max = int(grid.get("n_max", 8))
    rows, notes = [], []
    for text in grid.get("specs", []):
        spec = parse_spec(str(text))
        series, ns = [], []
        for n in range(spec.p + 2, n_max + 1):
            try:
                result = ex_forest_general(n, spec)
            except DomainError as e:
                notes.append(f"F={spec}: {e}")
                break
            try:
                report = brute_ex_general(n, spec, state["budget"], state["workers"], state["progress"])
            except (BudgetExceededError, OracleBudgetError) as e:
                rows.append(budget_row(f"n={n} F={spec}", e))
                continue
            series.append(make_row(f"n={n} F={spec}", result.value, report.max_edges, report.max_edges == result.value,
                                   result.case_label))
            ns.append(n)
        if series:
            series, note = mark_asymptotic(series, f"F={spec}", ns)
            rows.extend(series)
            notes.append(note)
    return rows, notes


def general_checker(state: VerifyState) -> VerifyState:
    """
    General checker node.

    Args:
        state: VerifyState with theorem thm1.1 or thm1.4

    Returns:
        Updated state with rows (and threshold notes for thm1.4)
    """
    rows = list(state.get("rows") or [])
    notes = list(state.get("notes") or [])
    if state["theorem"] == "thm1.1":
        rows.extend(_check_erdos_gallai(state))
    else:
        new_rows, new_notes = _check_forest_general(state)
        rows.extend(new_rows)
        notes.extend(new_notes)
    logger.info("%s: %d rows", state["theorem"], len(rows))
    return {**state, "rows": rows, "notes": notes}
