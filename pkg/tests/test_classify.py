import pickle

import pytest
from hypothesis import given, settings

from conftest import connected_graphs, random_relabel
from edgebalance import (
    ALL_T,
    AUGMENTED,
    STRICT,
    DisconnectedGraph,
    Graph,
    complete,
    complete_bipartite,
    cycle,
    empty,
    full_report,
    gt_db_values,
    gt_edb_values,
    gt_ndb,
    gt_nedb,
    gt_sedb_values,
    hypercube,
    is_gt_db,
    is_gt_edb,
    is_gt_nedb,
    is_gt_sedb,
    is_sedb,
    path,
)
from edgebalance.classify import ratio_values, values_to_json
from oracles import brute_cells, brute_counts


def brute_values(g, pick, t_max):
    """Admissible t by direct per-edge search, None when there is no constraint."""
    pairs = [pick(brute_counts(g, a, b)) for a, b in g.edges]
    pairs = [p for p in pairs if p != (0, 0)]
    if not pairs:
        return None
    return {t for t in range(1, t_max + 1) if all(x == t * y or y == t * x for x, y in pairs)}


def as_set(values, t_max):
    return None if values is ALL_T else set(values)


class TestRatio:
    def test_basic(self):
        assert ratio_values(6, 2) == {3}
        assert ratio_values(2, 6) == {3}
        assert ratio_values(4, 6) == frozenset()
        assert ratio_values(0, 3) == frozenset()
        assert ratio_values(0, 0) is None

    def test_all_t(self):
        assert 5 in ALL_T and 1 in ALL_T
        assert 0 not in ALL_T and 1.5 not in ALL_T
        assert values_to_json(ALL_T) == "all"
        assert values_to_json(frozenset({3, 1})) == [1, 3]
        assert pickle.loads(pickle.dumps(ALL_T)) is ALL_T


class TestFamilies:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("t", [1, 2, 3, 4])
    def test_kn_tn(self, n, t):
        g = complete_bipartite(n, t * n)
        for c in full_report(g, AUGMENTED).per_edge_counts:
            assert (c.m_alpha, c.m_beta) == (t * n, n)
            assert (c.n_alpha, c.n_beta) == (t * n, n)
        assert is_gt_edb(g, t, AUGMENTED)
        assert gt_nedb(g, AUGMENTED) == (t, n)

    def test_k24_vertex_side(self, k24):
        assert gt_db_values(k24) == {2}
        assert gt_ndb(k24) == (2, 2)
        assert is_gt_ndb_2(k24)

    @pytest.mark.parametrize("graph", [cycle(4), cycle(5), cycle(6), cycle(7), hypercube(3), hypercube(4), complete(4)])
    def test_vertex_transitive_balanced(self, graph):
        rep = full_report(graph)
        assert rep.db and rep.edb and rep.sedb
        assert 1 in rep.gt_db_values

    def test_path_unbalanced(self):
        rep = full_report(path(4), STRICT)
        assert not rep.db and not rep.edb

    def test_k1(self):
        rep = full_report(Graph(1))
        assert rep.gt_db_values is ALL_T and rep.gt_edb_values is ALL_T
        assert rep.gt_nedb is None and rep.diameter == 0

    def test_k2(self):
        g = complete(2)
        assert gt_edb_values(g, STRICT) is ALL_T
        assert gt_edb_values(g, AUGMENTED) == {1}
        assert gt_nedb(g, STRICT) == (1, 0)
        assert gt_nedb(g, AUGMENTED) == (1, 1)
        assert is_gt_nedb(g, 7, STRICT)
        assert gt_sedb_values(g) is ALL_T

    def test_c4_nicely(self):
        assert gt_nedb(cycle(4), AUGMENTED) == (1, 2)
        assert gt_nedb(cycle(4), STRICT) == (1, 1)
        assert is_gt_nedb(cycle(4), 1) and not is_gt_nedb(cycle(4), 2)

    def test_star_not_nicely(self):
        # K_{1,3}: augmented (3, 1) on every edge, a constant pair
        assert gt_nedb(complete_bipartite(1, 3)) == (3, 1)
        assert gt_nedb(path(4)) is None

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraph):
            full_report(empty(2))

    def test_report_dict(self, k24):
        d = full_report(k24).to_dict()
        assert d["gt_edb_values"] == [2] and d["convention"] == "augmented"
        assert len(d["per_edge_counts"]) == 8
        assert "per_edge_counts" not in full_report(k24).to_dict(include_edges=False)


def is_gt_ndb_2(g):
    from edgebalance.classify import is_gt_ndb
    return is_gt_ndb(g, 2) and not is_gt_ndb(g, 1)


class TestStrong:
    def test_hypercube_every_level(self):
        assert is_sedb(hypercube(3))
        assert 1 in gt_sedb_values(hypercube(3))

    @pytest.mark.parametrize("n,t", [(1, 2), (2, 2), (2, 3), (3, 2)])
    def test_k_n_tn_strong(self, n, t):
        # one level below the diameter: tn - 1 edges near alpha, n - 1 near beta
        g = complete_bipartite(n, t * n)
        assert gt_sedb_values(g) == {t}
        assert is_gt_sedb(g, t) and not is_gt_sedb(g, t + 1)

    def test_restricted_range_differs_on_witness(self):
        from edgebalance import parse_graph6
        g = parse_graph6("FFzn_")
        assert 1 in gt_sedb_values(g)
        assert not is_sedb(g)
        assert 1 not in gt_edb_values(g, STRICT)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=7))
def test_values_match_brute_force(g):
    t_max = max(g.n, g.m) + 2
    got = gt_db_values(g)
    want = brute_values(g, lambda c: (c[0], c[1]), t_max)
    assert as_set(got, t_max) == want
    for conv, off in ((STRICT, 0), (AUGMENTED, 1)):
        got = gt_edb_values(g, conv)
        want = brute_values(g, lambda c: (c[3] + off, c[4] + off), t_max)
        assert as_set(got, t_max) == want
        for t in range(1, 5):
            assert is_gt_edb(g, t, conv) == (t in got)
    for t in range(1, 5):
        assert is_gt_db(g, t) == (t in gt_db_values(g))


@settings(max_examples=50, deadline=None)
@given(connected_graphs(min_n=2, max_n=7))
def test_strong_values_match_cells(g):
    rep = full_report(g)
    d = rep.diameter
    t_max = g.m + 2
    for top in (d - 1, d):
        want = set(range(1, t_max + 1))
        constrained = False
        for a, b in g.edges:
            cells = brute_cells(g, a, b)
            lv = [(cells.get((i - 1, i), 0), cells.get((i, i - 1), 0)) for i in range(1, top + 1)]
            if not lv:
                continue
            constrained = True
            ok = {t for t in want
                  if all(x + 1 == t * (y + 1) for x, y in lv) or all(y + 1 == t * (x + 1) for x, y in lv)}
            want &= ok
        got = gt_sedb_values(g, max_level=top)
        assert as_set(got, t_max) == (want if constrained else None)
    assert rep.sedb == (1 in gt_sedb_values(g, max_level=d))


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=7), connected_graphs().map(lambda g: g.m))
def test_report_invariant_under_relabelling(g, seed):
    a = full_report(g).to_dict(include_edges=False)
    b = full_report(random_relabel(g, seed)).to_dict(include_edges=False)
    assert a == b
