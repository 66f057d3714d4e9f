import random

import pytest
from hypothesis import strategies as st

from edgebalance import Graph


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    """Random connected graph: a random spanning tree plus a random subset of other pairs."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    others = [(u, v) for v in range(n) for u in range(v) if (u, v) not in edges]
    if others:
        extra = draw(st.lists(st.sampled_from(others), unique=True, max_size=len(others)))
        edges.update(extra)
    perm = draw(st.permutations(list(range(n))))
    return Graph(n, ((perm[u], perm[v]) for u, v in edges))


@st.composite
def any_graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def random_relabel(graph, seed):
    perm = list(range(graph.n))
    random.Random(seed).shuffle(perm)
    return graph.relabel(perm)


@pytest.fixture
def k24():
    from edgebalance import complete_bipartite
    return complete_bipartite(2, 4)
