"""All-pairs hop distances and the vertex/edge distances built on them."""

from __future__ import annotations

import numpy as np

from .errors import DisconnectedGraph
from .graph import Edge, Graph, bfs_levels, is_connected

#: Marker stored for unreachable vertex pairs.
UNREACHABLE = np.iinfo(np.int16).max

DistanceMatrix = np.ndarray


def all_pairs_distances(graph: Graph) -> DistanceMatrix:
    """BFS from every vertex; int16 matrix, :data:`UNREACHABLE` where no path exists.

    The returned array is read-only so it can be shared between analyses.
    """
    n = graph.n
    dist = np.full((n, n), UNREACHABLE, dtype=np.int16)
    for s in range(n):
        row = np.asarray(bfs_levels(graph, s), dtype=np.int16)
        dist[s] = np.where(row < 0, UNREACHABLE, row)
    dist.flags.writeable = False
    return dist


def vertex_edge_distance(dist: DistanceMatrix, w: int, f: Edge) -> int:
    return int(min(dist[w, f[0]], dist[w, f[1]]))


def edge_edge_distance(dist: DistanceMatrix, f: Edge, g: Edge) -> int:
    """Smallest of the four endpoint-to-endpoint distances."""
    return int(min(dist[f[0], g[0]], dist[f[0], g[1]], dist[f[1], g[0]], dist[f[1], g[1]]))


def vertex_edge_matrix(graph: Graph, dist: DistanceMatrix) -> np.ndarray:
    """``out[w, k]`` = distance from vertex ``w`` to the edge with index ``k``."""
    if graph.m == 0:
        return np.zeros((graph.n, 0), dtype=np.int16)
    ends = np.asarray(graph.edges, dtype=np.intp)
    return np.minimum(dist[:, ends[:, 0]], dist[:, ends[:, 1]])


def diameter(dist: DistanceMatrix) -> int:
    if dist.size == 0:
        return 0
    if (dist == UNREACHABLE).any():
        raise DisconnectedGraph("diameter is undefined for a disconnected graph")
    return int(dist.max())


def require_connected(graph: Graph) -> None:
    if not is_connected(graph):
        raise DisconnectedGraph(f"{graph!r} is not connected")
