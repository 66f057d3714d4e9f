"""Independent reference computations used only by the tests.

Everything here goes through networkx or literal loops over the
definitions, never through edgebalance's own distance or count kernels.
"""

from collections import defaultdict
from itertools import combinations

import networkx as nx


def to_nx(graph):
    h = nx.Graph()
    h.add_nodes_from(range(graph.n))
    h.add_edges_from(graph.edges)
    return h


def nx_distances(graph):
    return dict(nx.all_pairs_shortest_path_length(to_nx(graph)))


def brute_counts(graph, alpha, beta):
    """(n_alpha, n_beta, n_zero, m_alpha, m_beta, m_zero) under STRICT, from the definitions."""
    d = nx_distances(graph)
    n_a = sum(1 for w in range(graph.n) if d[w][alpha] < d[w][beta])
    n_b = sum(1 for w in range(graph.n) if d[w][beta] < d[w][alpha])
    m_a = m_b = m_0 = 0
    for x, y in graph.edges:
        if {x, y} == {alpha, beta}:
            continue
        da = min(d[alpha][x], d[alpha][y])
        db = min(d[beta][x], d[beta][y])
        if da < db:
            m_a += 1
        elif db < da:
            m_b += 1
        else:
            m_0 += 1
    return n_a, n_b, graph.n - n_a - n_b, m_a, m_b, m_0


def brute_cells(graph, alpha, beta):
    d = nx_distances(graph)
    cells = defaultdict(int)
    for x, y in graph.edges:
        if {x, y} == {alpha, beta}:
            continue
        cells[(min(d[alpha][x], d[alpha][y]), min(d[beta][x], d[beta][y]))] += 1
    return dict(cells)


def naive_connected_classes(n):
    """Non-isomorphic connected graphs on n vertices: every edge subset of K_n,
    filtered by connectivity, deduplicated with networkx's VF2 isomorphism test."""
    pairs = list(combinations(range(n), 2))
    buckets = defaultdict(list)
    for mask in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for k, p in enumerate(pairs) if mask >> k & 1)
        if not nx.is_connected(h):
            continue
        key = (h.number_of_edges(), tuple(sorted(d for _, d in h.degree())),
               nx.weisfeiler_lehman_graph_hash(h, iterations=3))
        if not any(nx.is_isomorphic(h, r) for r in buckets[key]):
            buckets[key].append(h)
    return [g for reps in buckets.values() for g in reps]


def naive_connected_count(n):
    return len(naive_connected_classes(n))
