import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import get_group
from nilgraph import (CliqueTimeout, NnGraph, build_full_graph, build_reduced_graph,
                      clique_number, diameter, export_dot, girth, graph_metrics, is_planar,
                      maximum_clique, to_dot)
from nilgraph.graph import connected_components, degree_set, eccentricities, edge_count
from nilgraph.nilpotentizer import nil_table


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.edges())
    return G


@st.composite
def random_graphs(draw, max_n=14):
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    density = draw(st.floats(0.0, 1.0))
    rng = np.random.default_rng(draw(st.integers(0, 2 ** 32 - 1)))
    edges = [e for e in pairs if rng.random() < density]
    return NnGraph.from_edges(n, edges)


def test_nilpotent_graphs_are_edgeless():
    Q8 = get_group("Q8")
    assert edge_count(build_full_graph(Q8)) == 0
    assert build_reduced_graph(Q8).vertex_count == 0
    assert degree_set(build_full_graph(Q8)) == {0}


def test_s3_full_graph():
    S3 = get_group("S3")
    g = build_full_graph(S3)
    A = g.adjacency
    t = [S3.index_of(s) for s in ("(1 2)", "(1 3)", "(2 3)")]
    c = [S3.index_of(s) for s in ("(1 2 3)", "(1 3 2)")]
    assert not A[S3.identity].any()
    assert all(A[a, b] for a in t for b in t if a != b)
    assert all(A[a, b] for a in t for b in c)
    assert not A[c[0], c[1]]
    assert degree_set(g) == {0, 3, 4}
    assert connected_components(g) == [1, 5]
    assert girth(g) == 3 and clique_number(g) == 4


def test_s3_reduced_graph():
    g = build_reduced_graph(get_group("S3"))
    assert g.vertex_count == 5 and edge_count(g) == 9
    assert diameter(g) == 2 and is_planar(g)
    assert edge_count(g) == (2 - 1) * 36 // (2 * 2)


def test_s4_graphs():
    S4 = get_group("S4")
    g = build_full_graph(S4)
    assert g.degrees()[S4.index_of("(1 2)(3 4)")] == 8
    assert np.array_equal(g.degrees(), S4.order - nil_table(S4).sizes())
    r = build_reduced_graph(S4)
    assert not is_planar(r)
    assert edge_count(r) >= 576 // 4


def test_clique_numbers():
    assert clique_number(build_full_graph(get_group("S3"))) == 4
    assert clique_number(build_reduced_graph(get_group("D12"))) == 4
    assert clique_number(build_reduced_graph(get_group("A5"))) == 21


def test_clique_conventions_and_budget():
    assert clique_number(NnGraph.from_edges(0, [])) == 0
    assert clique_number(NnGraph.from_edges(3, [])) == 1
    with pytest.raises(CliqueTimeout):
        maximum_clique(build_reduced_graph(get_group("A5")), budget=5)


def test_metrics_and_timeout_note():
    g = build_reduced_graph(get_group("A5"))
    m = graph_metrics(g, clique_budget=5)
    assert m.clique_number is None and m.notes and m.notes[0].startswith("clique timeout")
    assert graph_metrics(NnGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])).girth is None


def test_disconnected_diameter_is_max_over_components():
    g = NnGraph.from_edges(7, [(0, 1), (1, 2), (2, 3), (4, 5)])
    assert diameter(g) == 3
    assert eccentricities(g).tolist() == [3, 2, 2, 3, 1, 1, 0]


def test_planarity_small_cases():
    K4 = NnGraph.from_edges(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    K5 = NnGraph.from_edges(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])
    K33 = NnGraph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert is_planar(K4) and not is_planar(K5) and not is_planar(K33)
    assert not is_planar(NnGraph(nx.to_numpy_array(nx.petersen_graph()) > 0, [""] * 10, np.arange(10)))


def test_dot_export(tmp_path):
    empty = to_dot(NnGraph.from_edges(0, [], name="E"))
    assert empty.splitlines() == ['graph "full E" {', "}"]
    g = build_reduced_graph(get_group("S3"))
    text = to_dot(g)
    lines = text.splitlines()
    assert sum("[label=" in ln for ln in lines) == 5
    assert sum(" -- " in ln for ln in lines) == 9
    p1, p2 = tmp_path / "a.dot", tmp_path / "b.dot"
    export_dot(g, p1)
    export_dot(build_reduced_graph(get_group("S3")), p2)
    assert p1.read_bytes() == p2.read_bytes()
    parsed = [tuple(int(v) for v in ln.strip(" ;").split(" -- ")) for ln in lines if " -- " in ln]
    assert parsed == g.edges()


@pytest.mark.parametrize("name", ["S3", "S4", "A4", "D12", "T", "A4xC2", "D10"])
def test_group_graph_invariants(name):
    G = get_group(name)
    for g in (build_full_graph(G), build_reduced_graph(G)):
        A = g.adjacency
        assert np.array_equal(A, A.T) and not A.diagonal().any()
        assert edge_count(g) * 2 == int(g.degrees().sum())
        w = clique_number(g)
        if g.vertex_count:
            assert (w >= 2) == (edge_count(g) >= 1)
        ref = to_nx(g)
        assert w == max((len(c) for c in nx.find_cliques(ref)), default=0)
    r = build_reduced_graph(G)
    keep = ~nil_table(G).nil_of_group.mask
    assert r.vertex_map.tolist() == np.flatnonzero(keep).tolist()


@settings(max_examples=150, deadline=None)
@given(random_graphs())
def test_metrics_against_networkx(g):
    ref = to_nx(g)
    assert clique_number(g) == max((len(c) for c in nx.find_cliques(ref)), default=0)
    assert sorted(connected_components(g)) == sorted(len(c) for c in nx.connected_components(ref))
    expected_diam = max((nx.diameter(ref.subgraph(c)) for c in nx.connected_components(ref)), default=0)
    assert diameter(g) == expected_diam
    cycles = nx.minimum_cycle_basis(ref)
    assert girth(g) == (min(len(c) for c in cycles) if cycles else None)
    assert is_planar(g) == nx.check_planarity(ref)[0]
