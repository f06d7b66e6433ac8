"""
Spectral checker node

thm1.6 : K_{p'} ∇ (K̄_{n-p'-2} ∪ K_2) has a strictly larger spectral radius than
         K_{p'} ∇ K̄_{n-p'}.
thm1.7 : max spectral radius over F-free bipartite graphs of order n is at most
         sqrt(p(n-p)), attained by K_{p,n-p}.
cor1.8 : min least eigenvalue over F-free graphs of order n is at least -sqrt(p(n-p)),
         and every bipartite graph met satisfies lambda_min = -lambda_max.
The last two are asymptotic: only the largest n of each spec can fail.
"""

import logging

from constructions.families import complete_bipartite
from errors import OracleBudgetError
from graphs.canonical import canonical_key_general, key_hex
from graphs.forest_spec import parse_spec
from nodes.common import budget_row, make_row, mark_asymptotic
from oracle.spectral_search import brute_spectral_max
from spectral.power import nikiforov_comparison
from state import VerifyState

logger = logging.getLogger("SpectralCheck")


def _check_path_constructions(state: VerifyState) -> list:
    grid = state["grid"]
    tol = state["budget"].spectral_tol
    rows = []
    for p_prime in [int(v) for v in grid.get("p_prime", [1, 2])]:
        for n in [int(v) for v in grid.get("n", range(6, 10))]:
            cmp = nikiforov_comparison(p_prime, n, tol)
            rows.append(
                make_row(
                    f"p'={p_prime} n={n}",
                    "odd > even",
                    f"{cmp.lambda_odd:.9f} vs {cmp.lambda_even:.9f}",
                    cmp.odd_beats_even,
                )
            )
    return rows


def _check_spectral_search(state: VerifyState, bipartite_only: bool) -> tuple[list, list]:
    grid = state["grid"]
    budget = state["budget"]
    tol = budget.spectral_tol
    rows, notes = [], []
    for text in grid.get("specs", ["2,2"]):
        spec = parse_spec(str(text))
        if spec.p < 1:
            notes.append(f"F={spec}: no spectral bound for p=0")
            continue
        series, ns = [], []
        for n in [int(v) for v in grid.get("n", [])]:
            if n <= spec.p:
                continue
            try:
                report = brute_spectral_max(n, spec, bipartite_only, budget, tol, state["progress"])
            except OracleBudgetError as e:
                rows.append(budget_row(f"n={n} F={spec}", e))
                continue
            equality = key_hex(canonical_key_general(complete_bipartite(spec.p, n - spec.p).to_general()))
            if bipartite_only:
                ok = report.value <= report.bound + 4 * tol
                expected = f"<= {report.bound:.9f}"
            else:
                ok = report.value >= report.bound - 4 * tol and report.symmetry_violations == 0
                expected = f">= {report.bound:.9f}"
            note = None
            if ok and equality not in report.extremal_keys:
                note = "K_{p,n-p} is not extremal here"
            elif ok and len(report.extremal_keys) > 1:
                note = f"{len(report.extremal_keys)} extremal graphs"
            if not bipartite_only:
                extra = f"symmetry checked on {report.symmetry_checked} bipartite graphs"
                note = f"{note}; {extra}" if note else extra
            series.append(make_row(f"n={n} F={spec}", expected, f"{report.value:.9f}", ok, note))
            ns.append(n)
        if series:
            series, note = mark_asymptotic(series, f"F={spec}", ns)
            rows.extend(series)
            notes.append(note)
    return rows, notes


def spectral_checker(state: VerifyState) -> VerifyState:
    """
    Spectral checker node.

    Args:
        state: VerifyState with theorem thm1.6, thm1.7 or cor1.8

    Returns:
        Updated state with rows and notes
    """
    rows = list(state.get("rows") or [])
    notes = list(state.get("notes") or [])
    theorem = state["theorem"]
    if theorem == "thm1.6":
        rows.extend(_check_path_constructions(state))
    else:
        new_rows, new_notes = _check_spectral_search(state, bipartite_only=theorem == "thm1.7")
        rows.extend(new_rows)
        notes.extend(new_notes)
    logger.info("%s: %d rows", theorem, len(rows))
    return {**state, "rows": rows, "notes": notes}
