import pytest

from config import OracleBudget
from errors import DomainError
from graphs.forest_spec import parse_spec
from nodes import CHECKERS, planner, reporter
from nodes.common import budget_row, make_row, mark_asymptotic
from nodes.planner import load_grids
from workflow import route_after_planner, run_verify

BUDGET = OracleBudget()


def base_state(theorem, overrides=None):
    return {
        "theorem": theorem,
        "overrides": overrides or {},
        "grid": {},
        "budget": BUDGET,
        "workers": 1,
        "progress": False,
        "checker": None,
        "rows": [],
        "notes": [],
        "report": None,
    }


# -------------------------------------------------------------- planner / routing


def test_planner_merges_overrides_over_defaults():
    state = planner(base_state("THM1.2", {"max_mn": 6, "k": None}))
    assert state["theorem"] == "thm1.2"
    assert state["checker"] == "path_checker"
    assert state["grid"]["max_mn"] == 6
    assert state["grid"]["k"] == [2, 3, 4, 5, 6, 7, 8]
    assert route_after_planner(state) == "path_checker"


def test_every_theorem_has_a_default_grid():
    for theorem in CHECKERS:
        state = planner(base_state(theorem))
        assert state["grid"], theorem


def test_unknown_theorem_id():
    with pytest.raises(DomainError, match="unknown theorem id"):
        run_verify("thm9.9", budget=BUDGET)


# -------------------------------------------------------------- reporter


def test_reporter_counts_only_fatal_rows():
    rows = [
        make_row("a", 1, 1, True),
        make_row("b", 2, 3, False),
        budget_row("c", RuntimeError("node budget")),
    ]
    state = reporter({**base_state("thm1.2"), "rows": rows, "notes": ["n1"]})
    report = state["report"]
    assert report.checked == 3
    assert report.failures == 1
    assert report.summary == "first disagreement: b"
    assert not report.passed
    assert report.notes == ["n1"]


def test_asymptotic_series_fails_only_at_largest_n():
    rows = [make_row("n=3", 2, 3, False), make_row("n=4", 3, 3, True), make_row("n=5", 4, 4, True)]
    adjusted, note = mark_asymptotic(rows, "F=P2+P2", [3, 4, 5])
    assert [row.fatal for row in adjusted] == [False, False, False]
    assert note == "F=P2+P2: holds for all tested n >= 4"

    rows = [make_row("n=3", 2, 2, True), make_row("n=4", 3, 4, False)]
    adjusted, note = mark_asymptotic(rows, "F=P2+P2", [3, 4])
    assert adjusted[-1].fatal
    assert note == "F=P2+P2: largest tested n=4 disagrees"


# -------------------------------------------------------------- end to end


def test_verify_path_theorem_small_grid():
    report = run_verify("thm1.2", {"max_mn": 6, "k": [2, 3, 4, 5]}, BUDGET)
    assert report.passed
    assert report.summary == "all agree"
    # (m, n) in {(1,1..6), (2,2), (2,3)} for each k
    assert report.checked == 8 * 4
    assert report.rows[0].params == "m=1 n=1 k=2"


def test_verify_erdos_gallai_small_grid():
    report = run_verify("thm1.1", {"n_max": 5, "k": [3, 4]}, BUDGET)
    assert report.passed
    assert [row.params for row in report.rows] == ["n=3 k=3", "n=4 k=3", "n=5 k=3", "n=4 k=4", "n=5 k=4"]
    assert all(row.expected.startswith("<= ") for row in report.rows)


def test_verify_general_forest_records_threshold():
    report = run_verify("thm1.4", {"specs": ["2,2"], "n_max": 6}, BUDGET)
    assert report.passed
    # a triangle beats the star at n=3
    assert not report.rows[0].ok
    assert not report.rows[0].fatal
    assert report.notes == ["F=P2+P2: holds for all tested n >= 4"]


def test_verify_forest_scan():
    report = run_verify("thm1.5", {"scans": [{"spec": "2,2", "m": 2, "n_max": 5}]}, BUDGET)
    assert report.passed
    assert [row.params for row in report.rows] == [f"m=2 n={n} F=P2+P2" for n in range(2, 6)]
    assert report.notes == ["m=2 F=P2+P2: holds for all tested n >= 2"]


def test_verify_odd_path_construction_wins():
    report = run_verify("thm1.6", {"p_prime": [1], "n": [6, 7]}, BUDGET)
    assert report.passed
    assert report.checked == 2


def test_verify_bipartite_spectral_bound():
    report = run_verify("thm1.7", {"specs": ["2,2"], "n": [4, 5]}, BUDGET)
    assert report.passed
    assert report.rows[0].expected == "<= 1.732050808"


def test_verify_first_p7_inequality():
    report = run_verify("lemma2.1", {"p": [3], "limit": 12}, BUDGET)
    assert report.passed
    assert report.rows[0].observed == "equality [(0, 0), (2, 6)]"


def test_verify_second_p7_inequality():
    report = run_verify("lemma2.2", {"p": [3], "m": [10], "limit": 12}, BUDGET)
    assert report.passed
    assert report.rows[0].params == "p=3 m=10 limit=12"
    assert report.rows[0].observed == "equality [(2, 7)]"


def test_verify_second_p7_inequality_skips_small_m():
    report = run_verify("lemma2.2", {"p": [3], "m": [9], "limit": 12}, BUDGET)
    assert report.passed
    assert report.checked == 0
    assert report.notes == ["p=3 m=9: skipped, the second inequality needs m >= 10"]


def test_verify_constructions_small_hosts():
    report = run_verify("constructions", {"specs": ["4,2", "5,5"], "max_order": 12, "general_max_order": 8}, BUDGET)
    assert report.passed
    assert report.checked > 0
    assert all(row.observed.endswith("-free") for row in report.rows)


def test_verify_forest_scan_reports_a_persistent_miss():
    # P5+P3 with m=4: the oracle beats the closed form at every tested n
    report = run_verify("thm1.5", {"scans": [{"spec": "5,3", "m": 4, "n_max": 5}]}, BUDGET)
    assert not report.passed
    assert [(row.expected, row.observed) for row in report.rows] == [("9", "12"), ("11", "13")]
    assert [row.fatal for row in report.rows] == [False, True]
    assert report.notes == ["m=4 F=P5+P3: largest tested n=5 disagrees"]


def test_verify_forest_scan_threshold_above_m():
    report = run_verify("thm1.5", {"scans": [{"spec": "3,3", "m": 2, "n_max": 6}]}, BUDGET)
    assert report.passed
    assert report.notes == ["m=2 F=P3+P3: holds for all tested n >= 5"]


# -------------------------------------------------------------- default grids


def test_forest_grid_covers_every_admissible_m():
    scans = load_grids()["thm1.5"]["scans"]
    for text in ("2,2", "3,2", "4,2", "3,3", "5,3"):
        entries = [s for s in scans if s["spec"] == text]
        p = parse_spec(text).p
        # m in [p+1, n] with m + n <= 9
        assert {s["m"] for s in entries} == set(range(p + 1, 5)), text
        for s in entries:
            assert s["n_max"] >= 9 - s["m"]
            assert s["m"] * s["n_max"] <= BUDGET.max_cells


def test_erdos_gallai_grid_reaches_order_seven():
    grid = load_grids()["thm1.1"]
    assert grid["n_max"] == 7
    assert set(range(2, 7)) <= set(grid["k"])
    assert grid["n_max"] <= BUDGET.max_general_order
