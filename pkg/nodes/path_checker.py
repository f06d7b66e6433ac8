"""
Path checker node

Compares the exact bipartite path formula with the oracle on every (m, n, k) with
1 <= m <= n, m*n <= max_mn. A value mismatch or a formula extremal graph missing
from the oracle's extremal set fails the instance. When the formula claims a unique
extremal graph but the oracle finds more, the instance still passes with a note:
at small n a second graph can tie (e.g. (3,4,P_7) also has K_{3,3} ∪ K̄_1).
"""

import logging

from errors import BudgetExceededError, OracleBudgetError
from formulas.turan import ex_path_bipartite
from graphs.forest_spec import LinearForestSpec
from nodes.common import budget_row, make_row
from oracle.brute import brute_ex_bipartite, descriptor_keys
from state import VerifyState

logger = logging.getLogger("PathCheck")


def path_checker(state: VerifyState) -> VerifyState:
    """
    Path checker node.

    Args:
        state: VerifyState with grid keys max_mn and k

    Returns:
        Updated state with one row per instance
    """
    grid = state["grid"]
    budget = state["budget"]
    max_mn = int(grid.get("max_mn", 25))
    ks = [int(k) for k in grid.get("k", range(2, 9))]

    rows = list(state.get("rows") or [])
    for k in ks:
        spec = LinearForestSpec.of(k)
        for m in range(1, max_mn + 1):
            for n in range(m, max_mn // m + 1):
                result = ex_path_bipartite(m, n, k)
                params = f"m={m} n={n} k={k}"
                try:
                    report = brute_ex_bipartite(m, n, spec, budget, state["workers"], state["progress"])
                except (BudgetExceededError, OracleBudgetError) as e:
                    rows.append(budget_row(params, e))
                    continue
                if report.max_edges != result.value:
                    rows.append(make_row(params, result.value, report.max_edges, False, result.case_label))
                    logger.warning("%s: formula %d, oracle %d", params, result.value, report.max_edges)
                    continue

                expected = descriptor_keys(result, m, n)
                missing = expected - set(report.extremal_keys)
                if missing:
                    rows.append(
                        make_row(params, result.value, report.max_edges, False,
                                 f"{len(missing)} formula extremal graph(s) not extremal in the oracle")
                    )
                    continue
                note = None
                if result.unique and report.extremal_count > 1:
                    note = f"theorem states a unique extremal graph; oracle found {report.extremal_count}"
                rows.append(make_row(params, result.value, report.max_edges, True, note))
                logger.debug("%s: %d (%s)", params, result.value, result.case_label)
    logger.info("checked %d instances", len(rows))
    return {**state, "rows": rows}
