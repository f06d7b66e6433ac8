"""
Lemma checker node

Sweeps the two P_7 inequalities and compares the equality cases with the claimed
ones: {(0,0), (2,2p)} for the first and {(2, m-p)} for the second.
"""

import logging

from formulas.p7_lemmas import check_lemma_p7_first, check_lemma_p7_second
from nodes.common import make_row
from state import VerifyState

logger = logging.getLogger("LemmaCheck")


def lemma_checker(state: VerifyState) -> VerifyState:
    """
    Lemma checker node.

    Args:
        state: VerifyState with grid keys p, limit and (lemma2.2) m or m_extra

    Returns:
        Updated state with one row per (p, m)
    """
    grid = state["grid"]
    limit = int(grid.get("limit", 12))
    rows = list(state.get("rows") or [])
    notes = list(state.get("notes") or [])
    for p in [int(p) for p in grid.get("p", [3])]:
        if state["theorem"] == "lemma2.1":
            report = check_lemma_p7_first(p, limit)
            claimed = {(0, 0)} | ({(2, 2 * p)} if 2 * p <= limit else set())
            params = f"p={p} limit={limit}"
            reports = [(params, report, claimed)]
        else:
            reports = []
            if "m" in grid:
                ms = [int(m) for m in grid["m"]]
            else:
                ms = [3 * p + 1 + int(extra) for extra in grid.get("m_extra", [0])]
            for m in ms:
                if m < 3 * p + 1:
                    notes.append(f"p={p} m={m}: skipped, the second inequality needs m >= {3 * p + 1}")
                    continue
                report = check_lemma_p7_second(p, m, limit)
                claimed = {(2, m - p)} if m - p <= limit else set()
                reports.append((f"p={p} m={m} limit={limit}", report, claimed))

        for params, report, claimed in reports:
            observed = set(report.equality)
            ok = report.ok and observed == claimed
            note = None
            if report.violations:
                note = f"violations at {report.violations}"
            elif observed != claimed:
                note = f"equality at {sorted(observed)}"
            rows.append(make_row(params, f"equality {sorted(claimed)}", f"equality {sorted(observed)}", ok, note))
    logger.info("%s: %d rows", state["theorem"], len(rows))
    return {**state, "rows": rows, "notes": notes}
