import pytest

from config import OracleBudget
from constructions import kpn_plus_isolated
from errors import BudgetExceededError, DomainError, OracleBudgetError
from formulas import ex_path_bipartite, ex_path_general
from graphs import LinearForestSpec, parse_spec
from graphs.canonical import canonical_key, key_hex
from oracle import (
    brute_ex_bipartite,
    brute_ex_general,
    brute_spectral_max,
    enumerate_free_graphs,
    naive_ex_bipartite,
    threshold_scan,
)

BUDGET = OracleBudget()


def test_two_matching_on_2x2():
    report = brute_ex_bipartite(2, 2, parse_spec("2,2"), BUDGET)
    assert report.max_edges == 2
    assert report.extremal_count == 1
    star = kpn_plus_isolated(1, 2, 1)
    assert report.extremal_keys == [key_hex(canonical_key(star))]


def test_p3_on_3x5_matches_theorem():
    report = brute_ex_bipartite(3, 5, LinearForestSpec.of(3), BUDGET)
    assert report.max_edges == 3 == ex_path_bipartite(3, 5, 3).value


def test_two_matching_on_2x4_contains_star():
    report = brute_ex_bipartite(2, 4, parse_spec("2,2"), BUDGET)
    assert report.max_edges == 4
    assert key_hex(canonical_key(kpn_plus_isolated(1, 4, 1))) in report.extremal_keys


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3), (2, 5)])
@pytest.mark.parametrize("text", ["2,2", "3", "4", "3,2"])
def test_branch_and_bound_matches_naive_enumeration(m, n, text):
    spec = parse_spec(text)
    fast = brute_ex_bipartite(m, n, spec, BUDGET)
    slow = naive_ex_bipartite(m, n, spec)
    assert fast.max_edges == slow.max_edges
    assert fast.extremal_keys == slow.extremal_keys


@pytest.mark.parametrize("workers", [2, 4])
def test_report_is_independent_of_worker_count(workers):
    spec = parse_spec("3,2")
    one = brute_ex_bipartite(3, 4, spec, BUDGET, workers=1)
    many = brute_ex_bipartite(3, 4, spec, BUDGET, workers=workers)
    assert one.model_dump() == many.model_dump()


def test_elapsed_is_not_serialized():
    report = brute_ex_bipartite(2, 2, parse_spec("2,2"), BUDGET)
    assert "elapsed" not in report.model_dump()


def test_cell_budget():
    with pytest.raises(OracleBudgetError):
        brute_ex_bipartite(6, 6, parse_spec("2,2"), OracleBudget(max_cells=30))


def test_empty_side_rejected():
    with pytest.raises(DomainError):
        brute_ex_bipartite(0, 3, parse_spec("2,2"), BUDGET)


def test_node_budget_keeps_partial_report():
    with pytest.raises(BudgetExceededError) as info:
        brute_ex_bipartite(3, 4, parse_spec("4"), OracleBudget(max_nodes=3))
    partial = info.value.partial
    assert partial is not None
    assert partial.spec == "P4"
    assert partial.nodes > 3


def test_node_budget_counts_every_prefix_task():
    spec = parse_spec("4")
    full = brute_ex_bipartite(3, 4, spec, BUDGET)
    with pytest.raises(BudgetExceededError) as info:
        brute_ex_bipartite(3, 4, spec, OracleBudget(max_nodes=full.nodes - 1))
    assert info.value.partial.nodes > full.nodes - 1


@pytest.mark.parametrize("n,text,value,count", [(4, "2,2", 3, 2), (6, "2,2", 5, 1), (5, "2", 0, 1)])
def test_general_oracle(n, text, value, count):
    report = brute_ex_general(n, parse_spec(text), BUDGET)
    assert report.max_edges == value
    assert report.extremal_count == count


def test_general_oracle_order_limit():
    with pytest.raises(OracleBudgetError):
        brute_ex_general(9, parse_spec("2,2"), OracleBudget(max_general_order=8))


@pytest.mark.parametrize("n,k", [(5, 3), (5, 4), (6, 4), (6, 5)])
def test_erdos_gallai_on_every_visited_graph(n, k):
    seen = []
    report = brute_ex_general(n, LinearForestSpec.of(k), BUDGET, visitor=seen.append)
    bound = ex_path_general(n, k).value
    assert report.max_edges <= bound
    assert seen
    assert all(g.edge_count <= bound for g in seen)


def test_enumerate_free_graphs_counts_labelled_matchings():
    # P3-free labelled graphs on K_{2,2} cells: empty, 4 single edges, 2 perfect matchings
    graphs = list(enumerate_free_graphs(LinearForestSpec.of(3), sides=(2, 2)))
    assert len(graphs) == 7


def test_enumerate_free_graphs_argument_check():
    with pytest.raises(ValueError):
        list(enumerate_free_graphs(LinearForestSpec.of(3)))


def test_threshold_scan_two_matching():
    scan = threshold_scan(2, parse_spec("2,2"), 6, BUDGET)
    assert [row.n for row in scan.rows] == [2, 3, 4, 5, 6]
    assert all(row.agree for row in scan.rows)
    assert all(row.brute == row.n for row in scan.rows)
    assert scan.threshold == 2


def test_threshold_scan_out_of_regime_rows():
    scan = threshold_scan(1, parse_spec("2,2"), 3, BUDGET)
    assert all(row.formula is None and not row.agree for row in scan.rows)
    assert scan.threshold is None


def test_threshold_scan_rejects_short_range():
    with pytest.raises(DomainError):
        threshold_scan(4, parse_spec("2,2"), 3, BUDGET)


def test_spectral_search_bipartite():
    four = brute_spectral_max(4, parse_spec("2,2"), True, BUDGET)
    assert four.value == pytest.approx(3 ** 0.5, abs=1e-8)
    assert len(four.extremal_keys) == 1
    five = brute_spectral_max(5, parse_spec("2,2"), True, BUDGET)
    assert five.value == pytest.approx(2.0, abs=1e-8)
    assert five.bound == pytest.approx(2.0)


@pytest.mark.parametrize(
    "n", [4, 5, 6, pytest.param(7, marks=pytest.mark.slow), pytest.param(8, marks=pytest.mark.slow)]
)
def test_spectral_search_two_matching_is_a_star(n):
    report = brute_spectral_max(n, parse_spec("2,2"), True, BUDGET)
    assert report.value == pytest.approx((n - 1) ** 0.5, abs=1e-8)
    assert len(report.extremal_keys) == 1


def test_spectral_search_empty_graph_only():
    report = brute_spectral_max(4, LinearForestSpec.of(2), False, BUDGET)
    assert report.value == 0.0
    assert report.graphs_evaluated == 1


def test_spectral_search_general_checks_symmetry():
    report = brute_spectral_max(5, parse_spec("2,2"), False, BUDGET)
    assert report.value == pytest.approx(-2.0, abs=1e-8)
    assert report.symmetry_checked > 0
    assert report.symmetry_violations == 0
    assert report.bound == pytest.approx(-2.0)


@pytest.mark.slow
@pytest.mark.parametrize("text,m", [("2,2", 2), ("4,2", 3), ("3,3", 3), ("5,3", 3), ("3,2", 2)])
def test_threshold_scans_settle_by_eight(text, m):
    scan = threshold_scan(m, parse_spec(text), 8, BUDGET)
    assert scan.threshold is not None and scan.threshold <= 8
    assert scan.rows[-1].extremal_match is not False


@pytest.mark.slow
def test_path_oracle_sweep_matches_theorem():
    for k in range(2, 9):
        for m in range(1, 6):
            for n in range(m, 25 // m + 1):
                report = brute_ex_bipartite(m, n, LinearForestSpec.of(k), BUDGET)
                assert report.max_edges == ex_path_bipartite(m, n, k).value, (m, n, k)
