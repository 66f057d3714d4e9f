"""Immutable simple undirected graphs on dense 0-based vertex ids."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

from .errors import DuplicateEdge, LoopEdge, VertexOutOfRange

Edge = tuple[int, int]


class Graph:
    """A simple undirected graph.

    Vertices are ``0 .. vertex_count - 1``. Edges are stored once, as
    ``(u, v)`` with ``u < v``, in sorted order; the sorted position of an
    edge is its *edge index* and is used by every per-edge analysis.
    Instances are immutable and hashable, so they can be shared freely.
    """

    __slots__ = ("_n", "_edges", "_adj", "_index", "_masks", "_hash")

    def __init__(self, vertex_count: int, edges: Iterable[Edge] = ()):
        if vertex_count < 0:
            raise VertexOutOfRange(f"vertex_count must be >= 0, got {vertex_count}")
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside [0, {vertex_count})")
            canon.add((u, v) if u < v else (v, u))
        edge_tuple = tuple(sorted(canon))
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in edge_tuple:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_n", vertex_count)
        object.__setattr__(self, "_edges", edge_tuple)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(edge_tuple)})
        object.__setattr__(self, "_masks", None)
        object.__setattr__(self, "_hash", hash((vertex_count, edge_tuple)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge ``uv`` in :attr:`edges` (either orientation)."""
        try:
            return self._index[(min(u, v), max(u, v))]
        except KeyError:
            raise KeyError(f"({u}, {v}) is not an edge") from None

    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks (bit ``v`` set for neighbour ``v``)."""
        if self._masks is None:
            masks = []
            for nbrs in self._adj:
                mask = 0
                for w in nbrs:
                    mask |= 1 << w
                masks.append(mask)
            object.__setattr__(self, "_masks", tuple(masks))
        return self._masks

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise ValueError("perm must be a permutation of the vertex set")
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self._edges))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self._n}, m={len(self._edges)})"

    def __reduce__(self):
        return (Graph, (self._n, self._edges))


def from_edge_list(vertex_count: int, pairs: Iterable[Edge], strict: bool = False) -> Graph:
    """Build a :class:`Graph`, canonicalising edge orientation.

    Repeated edges (in either orientation) are merged unless ``strict`` is
    set, in which case :class:`DuplicateEdge` is raised.
    """
    pairs = [(int(u), int(v)) for u, v in pairs]
    if strict:
        seen = set()
        for u, v in pairs:
            key = (min(u, v), max(u, v))
            if key in seen and u != v:
                raise DuplicateEdge(f"edge {key} listed more than once")
            seen.add(key)
    return Graph(vertex_count, pairs)


def bfs_levels(graph: Graph, source: int) -> list[int]:
    """Hop distance from ``source`` to every vertex, ``-1`` where unreachable."""
    dist = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    adj = graph.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def is_connected(graph: Graph) -> bool:
    # the empty graph on zero vertices counts as connected; K_1 is connected
    if graph.n <= 1:
        return True
    return min(bfs_levels(graph, 0)) >= 0


def is_bipartite(graph: Graph) -> tuple[bool, Optional[list[int]]]:
    """Two-colour ``graph`` by BFS.

    Returns ``(True, colouring)`` with ``colouring[v]`` in ``{0, 1}`` when the
    graph is bipartite, else ``(False, None)``. Every component is coloured
    with its smallest vertex on side 0.
    """
    colour = [-1] * graph.n
    adj = graph.adjacency
    for start in range(graph.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False, None
    return True, colour
