import pytest

from constructions import (
    FamilyDescriptor,
    bipartite_matching,
    build_family,
    c4_double_star,
    complete_bipartite,
    double_block_same_side,
    kpn_plus_isolated,
    matching_graph,
    nikiforov_graph,
    pendant_graph,
    resolve_family,
    two_block,
    z_graph,
    z_graph_plus_isolated,
)
from embedding import contains_forest
from errors import DomainError, UnknownFamilyError
from formulas import ex_forest_bipartite, ex_path_bipartite
from graphs import LinearForestSpec, parse_spec


@pytest.mark.parametrize("a,b,edges", [(2, 3, 6), (0, 5, 0), (1, 1, 1)])
def test_complete_bipartite(a, b, edges):
    assert complete_bipartite(a, b).edge_count == edges


def test_kpn_plus_isolated():
    g = kpn_plus_isolated(2, 20, 1)
    assert (g.m, g.n, g.edge_count) == (3, 20, 40)
    g = kpn_plus_isolated(2, 5, 3)
    assert g.edge_count == 10
    assert [g.degree_x(x) for x in range(g.m)].count(0) == 3


@pytest.mark.parametrize("p,i,n,edges,shape", [(2, 1, 20, 40, (4, 20)), (2, 0, 20, 40, (4, 20)), (1, 2, 4, 4, (2, 4))])
def test_double_block_same_side(p, i, n, edges, shape):
    g = double_block_same_side(p, i, n)
    assert g.edge_count == edges
    assert (g.m, g.n) == shape


def test_double_block_degenerate_block_is_isolated():
    g = double_block_same_side(2, 0, 20)
    assert [g.degree_x(x) for x in range(4)] == [0, 0, 20, 20]


@pytest.mark.parametrize("args,edges", [((2, 20, 6, 1), 42), ((3, 20, 10, 2), 68)])
def test_two_block(args, edges):
    assert two_block(*args).edge_count == edges


def test_two_block_without_second_block_matches_kpn():
    g = two_block(2, 9, 5, 0)
    h = kpn_plus_isolated(2, 9, 3)
    assert g.edge_count == h.edge_count == 18
    assert sorted(g.degree_x(x) for x in range(5)) == sorted(h.degree_x(x) for x in range(5))


def test_z_graph():
    g = z_graph(4, 6, 2)
    assert g.edge_count == 14
    assert g.degree_y(0) == 4
    with pytest.raises(DomainError):
        z_graph(2, 6, 3)


def test_z_graph_plus_isolated():
    g = z_graph_plus_isolated(2, 10, 2)
    assert (g.m, g.n, g.edge_count) == (5, 10, 21)


def test_pendant_graph():
    g = pendant_graph(1, 10, 2)
    assert (g.m, g.n, g.edge_count) == (3, 10, 12)
    assert pendant_graph(2, 5, 0) == complete_bipartite(2, 5)
    with pytest.raises(DomainError):
        pendant_graph(1, 3, 4)


def test_bipartite_matching_and_c4_double_star():
    assert bipartite_matching(3, 5).edge_count == 3
    assert c4_double_star(2, 4, 4).edge_count == 8
    g = c4_double_star(1, 3, 5)
    assert (g.m, g.n, g.edge_count) == (3, 5, 4 + 3)


@pytest.mark.parametrize("t,edges,order", [(4, 2, 4), (5, 2, 5), (0, 0, 0)])
def test_matching_graph(t, edges, order):
    g = matching_graph(t)
    assert (g.edge_count, g.order) == (edges, order)


@pytest.mark.parametrize("p_prime,n,odd,edges", [(1, 5, False, 4), (1, 5, True, 5), (2, 6, False, 9), (2, 6, True, 10)])
def test_nikiforov_graph(p_prime, n, odd, edges):
    assert nikiforov_graph(p_prime, n, odd).edge_count == edges


def test_build_family_by_descriptor_and_alias():
    desc = FamilyDescriptor(family="z_graph", params=[5, 8, 3])
    assert build_family(desc) == build_family(("z", [5, 8, 3]))
    assert str(desc) == "z_graph(5, 8, 3)"
    assert resolve_family("K") == "complete_bipartite"


def test_unknown_family():
    with pytest.raises(UnknownFamilyError):
        build_family(("petersen", []))


def test_wrong_arity_is_a_domain_error():
    with pytest.raises(DomainError):
        build_family(("K", [2]))


@pytest.mark.parametrize(
    "m,n,text", [(3, 9, "4,2"), (4, 9, "4,2"), (5, 9, "4,2"), (4, 9, "5,3"), (3, 9, "3,3"), (5, 9, "5,5"), (4, 8, "5,3,2")]
)
def test_forest_descriptors_build_free_graphs_with_formula_size(m, n, text):
    spec = parse_spec(text)
    result = ex_forest_bipartite(m, n, spec)
    assert result.extremal
    for desc in result.extremal:
        g = build_family(desc)
        assert g.edge_count == result.value
        assert contains_forest(g, spec) is None


@pytest.mark.parametrize("m,n,k", [(3, 5, 3), (4, 4, 5), (3, 5, 5), (3, 3, 7), (4, 9, 7), (6, 6, 7), (3, 7, 6)])
def test_path_descriptors_build_free_graphs(m, n, k):
    result = ex_path_bipartite(m, n, k)
    for desc in result.extremal:
        g = build_family(desc)
        assert g.edge_count == result.value
        assert contains_forest(g, LinearForestSpec.of(k)) is None
