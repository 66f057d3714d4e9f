import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import any_graphs, connected_graphs
from edgebalance import (
    DuplicateEdge,
    Graph,
    LoopEdge,
    ParameterOutOfRange,
    ProductTooLarge,
    VertexOutOfRange,
    are_isomorphic,
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    empty,
    from_edge_list,
    generate,
    hypercube,
    is_bipartite,
    is_connected,
    lexicographic_product,
    path,
    star,
)
from oracles import to_nx


class TestConstruction:
    def test_k2(self):
        g = from_edge_list(2, [(0, 1)])
        assert (g.n, g.m, g.edges) == (2, 1, ((0, 1),))

    def test_c4(self):
        g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.m == 4
        assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
        assert g == cycle(4)

    def test_loop_rejected(self):
        with pytest.raises(LoopEdge):
            from_edge_list(3, [(0, 0)])

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            from_edge_list(2, [(0, 2)])

    def test_duplicates_merged_unless_strict(self):
        assert from_edge_list(3, [(0, 1), (1, 0)]).m == 1
        with pytest.raises(DuplicateEdge):
            from_edge_list(3, [(0, 1), (1, 0)], strict=True)

    def test_immutable(self):
        g = cycle(4)
        with pytest.raises(AttributeError):
            g.foo = 1

    def test_adjacency_sorted_and_consistent(self):
        g = from_edge_list(5, [(4, 0), (2, 0), (3, 1), (0, 1)])
        assert g.neighbors(0) == (1, 2, 4)
        assert sum(len(a) for a in g.adjacency) == 2 * g.m

    @given(any_graphs())
    def test_each_edge_twice_in_adjacency(self, g):
        seen = sorted((min(u, v), max(u, v)) for u in range(g.n) for v in g.neighbors(u))
        assert seen == sorted(list(g.edges) * 2)

    def test_hash_and_eq(self):
        assert hash(cycle(4)) == hash(from_edge_list(4, [(3, 0), (2, 3), (1, 2), (0, 1)]))
        assert cycle(4) != path(4)


class TestGenerators:
    def test_complete_bipartite(self):
        g = complete_bipartite(2, 4)
        assert (g.n, g.m) == (6, 8)

    def test_hypercube(self):
        g = hypercube(3)
        assert (g.n, g.m) == (8, 12)

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_hypercube_edges(self, d):
        assert hypercube(d).m == d * 2 ** (d - 1)

    def test_cycle_too_small(self):
        with pytest.raises(ParameterOutOfRange):
            cycle(2)

    @pytest.mark.parametrize("family,params", [
        ("complete_bipartite", (0, 3)), ("path", (0,)), ("complete", (0,)),
        ("hypercube", (0,)), ("empty", (-1,)), ("nonsense", (3,)), ("cycle", (3, 4)),
    ])
    def test_bad_parameters(self, family, params):
        with pytest.raises(ParameterOutOfRange):
            generate(family, *params)

    def test_empty_allows_zero(self):
        assert (empty(0).n, empty(0).m, empty(3).m) == (0, 0, 0)

    def test_generate_dispatch(self):
        assert generate("complete_bipartite", 2, 4) == complete_bipartite(2, 4)
        assert generate("cycle", 5) == cycle(5)

    def test_family_edge_counts(self):
        assert path(5).m == 4
        assert complete(5).m == 10
        assert cycle(7).m == 7
        assert star(3) == complete_bipartite(1, 3)


class TestProducts:
    def test_k2_box_k2_is_c4(self):
        assert are_isomorphic(cartesian_product(complete(2), complete(2)), cycle(4))

    def test_k2_box_q2_is_q3(self):
        assert are_isomorphic(cartesian_product(complete(2), hypercube(2)), hypercube(3))

    def test_grid(self):
        g = cartesian_product(path(3), path(3))
        assert (g.n, g.m) == (9, 12)
        # explicit construction, independent of the product code
        grid = nx.grid_2d_graph(3, 3)
        assert nx.is_isomorphic(to_nx(g), grid)

    def test_vertex_ids(self):
        a, b = path(2), path(3)
        g = cartesian_product(a, b)
        # (a=1, b=2) -> 1*3+2 = 5 adjacent to (0, 2) -> 2 and (1, 1) -> 4
        assert g.neighbors(5) == (2, 4)

    def test_lex_k2_empty2_is_c4(self):
        assert are_isomorphic(lexicographic_product(complete(2), empty(2)), cycle(4))

    def test_lex_unit_factor(self):
        assert lexicographic_product(complete(2), empty(1)) == complete(2)

    def test_lex_k2_k2_is_k4(self):
        g = lexicographic_product(complete(2), complete(2))
        assert g == complete(4)

    def test_budget(self):
        with pytest.raises(ProductTooLarge):
            cartesian_product(path(100), path(100), vertex_budget=4096)
        with pytest.raises(ProductTooLarge):
            lexicographic_product(path(70), path(70))

    @settings(max_examples=60, deadline=None)
    @given(any_graphs(max_n=5), any_graphs(max_n=5))
    def test_edge_count_formulas(self, a, b):
        assert cartesian_product(a, b).m == a.n * b.m + b.n * a.m
        assert lexicographic_product(a, b).m == a.m * b.n ** 2 + a.n * b.m

    @settings(max_examples=60, deadline=None)
    @given(any_graphs(max_n=5), any_graphs(max_n=5))
    def test_products_match_networkx(self, a, b):
        mine = cartesian_product(a, b)
        ref = nx.cartesian_product(to_nx(a), to_nx(b))
        relabel = {(x, y): x * b.n + y for x, y in ref.nodes}
        assert sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in ref.edges) == list(mine.edges)
        mine = lexicographic_product(a, b)
        ref = nx.lexicographic_product(to_nx(a), to_nx(b))
        assert sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in ref.edges) == list(mine.edges)

    @settings(max_examples=60, deadline=None)
    @given(any_graphs(max_n=5), any_graphs(max_n=5))
    def test_cartesian_connectivity(self, a, b):
        if a.n and b.n:
            assert is_connected(cartesian_product(a, b)) == (is_connected(a) and is_connected(b))


class TestConnectivityAndBipartite:
    def test_c4(self):
        ok, colouring = is_bipartite(cycle(4))
        assert is_connected(cycle(4)) and ok
        assert colouring == [0, 1, 0, 1]

    def test_odd_cycle(self):
        assert is_bipartite(cycle(5)) == (False, None)

    def test_isolated_vertices(self):
        assert not is_connected(empty(2))
        assert is_connected(empty(1))

    @given(any_graphs())
    def test_match_networkx(self, g):
        h = to_nx(g)
        if g.n:
            assert is_connected(g) == nx.is_connected(h)
        ok, colour = is_bipartite(g)
        assert ok == nx.is_bipartite(h)
        if ok:
            assert all(colour[u] != colour[v] for u, v in g.edges)
