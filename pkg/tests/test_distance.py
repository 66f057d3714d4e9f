import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from conftest import any_graphs, connected_graphs
from edgebalance import (
    UNREACHABLE,
    DisconnectedGraph,
    Graph,
    all_pairs_distances,
    complete,
    complete_bipartite,
    cycle,
    diameter,
    edge_edge_distance,
    empty,
    hypercube,
    path,
    vertex_edge_distance,
)
from edgebalance.distance import vertex_edge_matrix
from oracles import nx_distances, to_nx


def test_c6_edge_distance():
    g = cycle(6)
    d = all_pairs_distances(g)
    assert d[0, 3] == 3 and d[1, 4] == 3
    assert edge_edge_distance(d, (0, 1), (3, 4)) == 2


def test_vertex_edge_distance():
    d = all_pairs_distances(path(4))
    assert vertex_edge_distance(d, 0, (2, 3)) == 2
    assert vertex_edge_distance(d, 2, (2, 3)) == 0


def test_matrix_readonly_and_dtype():
    d = all_pairs_distances(cycle(5))
    assert d.dtype == np.int16
    with pytest.raises(ValueError):
        d[0, 1] = 7


def test_unreachable_marker():
    d = all_pairs_distances(empty(2))
    assert d[0, 1] == UNREACHABLE
    with pytest.raises(DisconnectedGraph):
        diameter(d)


@pytest.mark.parametrize("graph,expected", [
    (Graph(1), 0), (complete(2), 1), (complete(5), 1), (path(5), 4),
    (cycle(7), 3), (hypercube(4), 4), (complete_bipartite(2, 4), 2),
])
def test_diameter(graph, expected):
    assert diameter(all_pairs_distances(graph)) == expected


@settings(max_examples=80, deadline=None)
@given(any_graphs(max_n=8))
def test_distances_match_networkx(g):
    d = all_pairs_distances(g)
    ref = nx_distances(g)
    for u in range(g.n):
        for v in range(g.n):
            assert d[u, v] == ref[u].get(v, UNREACHABLE)


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=8))
def test_metric_axioms(g):
    d = all_pairs_distances(g).astype(int)
    assert (d == d.T).all()
    assert (np.diag(d) == 0).all()
    for k in range(g.n):
        assert (d <= d[:, [k]] + d[[k], :]).all()
    if g.n > 1:
        assert diameter(d.astype(np.int16)) == nx.diameter(to_nx(g))


@settings(max_examples=50, deadline=None)
@given(connected_graphs(min_n=2, max_n=7))
def test_vertex_edge_matrix_matches_definition(g):
    d = all_pairs_distances(g)
    ve = vertex_edge_matrix(g, d)
    ref = nx_distances(g)
    for w in range(g.n):
        for k, (x, y) in enumerate(g.edges):
            assert ve[w, k] == min(ref[w][x], ref[w][y])
    for f in g.edges:
        for h in g.edges:
            assert edge_edge_distance(d, f, h) == edge_edge_distance(d, h, f)
            assert (edge_edge_distance(d, f, h) == 0) == bool(set(f) & set(h))
