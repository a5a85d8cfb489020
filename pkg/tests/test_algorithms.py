from itertools import combinations

import pytest
from hypothesis import given, settings

from hyperkit import Graph, Hypergraph, connected_components, graph_expansion, simple_reduction
from hyperkit.errors import UnknownMode

from conftest import hypergraphs, union_find_components


def test_components_example():
    h = Hypergraph(edges=[{0, 1}, {1, 2}, {3, 4}])
    assert connected_components(h) == [[0, 1, 2], [3, 4]]


def test_components_edgeless():
    assert connected_components(Hypergraph(vertices=[0, 1])) == [[0], [1]]


def test_components_spanning_edge():
    assert connected_components(Hypergraph(edges=[set(range(5))])) == [list(range(5))]


def test_components_sparse_ids():
    h = Hypergraph(vertices=[10], edges=[{3, 7}, {7, 42}])
    assert connected_components(h) == [[3, 7, 42], [10]]


def test_reduction_drops_subset():
    assert simple_reduction(Hypergraph(edges=[{1, 2}, {1, 2, 3}])).edges == [frozenset({1, 2, 3})]


def test_reduction_antichain_fixpoint():
    h = Hypergraph(edges=[{1, 2}, {2, 3}])
    assert simple_reduction(h).same_structure(h)


def test_reduction_chain():
    h = Hypergraph(edges=[{1}, {1, 2}, {1, 2, 3}])
    reduced = simple_reduction(h)
    assert reduced.edges == [frozenset({1, 2, 3})]
    assert reduced.vertices == [1, 2, 3]
    assert h.num_edges == 3  # input untouched


def test_clique_single_edge_triangle():
    assert graph_expansion(Hypergraph(edges=[{0, 1, 2}]), "clique") == Graph.complete(range(3))


def test_star_single_edge():
    g = graph_expansion(Hypergraph(edges=[{0, 1, 2}]), "star")
    assert g.nodes == {0, 1, 2, 3}
    assert g.edges == {(0, 3), (1, 3), (2, 3)}


def test_clique_path():
    g = graph_expansion(Hypergraph(edges=[{0, 1}, {1, 2}]), "clique")
    expected = {
        (u, v)
        for u, v in combinations(range(3), 2)
        if any({u, v} <= e for e in ({0, 1}, {1, 2}))
    }
    assert g.edges == expected == {(0, 1), (1, 2)}


def test_unknown_mode():
    with pytest.raises(UnknownMode):
        graph_expansion(Hypergraph(edges=[{0}]), "line")


@settings(max_examples=300, deadline=None)
@given(hypergraphs())
def test_components_match_union_find(h):
    comps = connected_components(h)
    assert comps == union_find_components(h)
    flat = [v for c in comps for v in c]
    assert sorted(flat) == h.vertices and len(flat) == len(set(flat))


@settings(max_examples=300, deadline=None)
@given(hypergraphs())
def test_reduction_properties(h):
    r = simple_reduction(h)
    edges = r.edges
    assert not any(a < b for a in edges for b in edges)
    assert simple_reduction(r).same_structure(r)
    for e in h.edges:
        assert any(e <= f for f in edges)
    maximal = [e for e in h.edges if not any(e < f for f in h.edges)]
    assert set(edges) == set(maximal)


@settings(max_examples=300, deadline=None)
@given(hypergraphs())
def test_expansion_counts_and_components(h):
    clique = graph_expansion(h, "clique")
    star = graph_expansion(h, "star")
    assert len(clique.nodes) == h.num_vertices
    assert len(star.nodes) == h.num_vertices + h.num_edges
    assert len(star.edges) == sum(h.edge_sizes())
    expected = connected_components(h)
    assert clique.connected_components() == expected
    vs = set(h.vertices)
    projected = [[u for u in c if u in vs] for c in star.connected_components()]
    assert sorted(c for c in projected if c) == expected
