"""Per-edge proximity counts, distance partitions and Szeged-type indices.

For an edge ``f = (alpha, beta)``:

* ``n_alpha`` counts vertices strictly closer to ``alpha`` than to ``beta``
  (``alpha`` itself included), ``n_zero`` the equidistant vertices.
* ``m_alpha`` counts edges ``g`` with ``d(alpha, g) < d(beta, g)`` where the
  vertex-to-edge distance is the nearer endpoint.

Edge counts come in two conventions. ``STRICT`` leaves ``f`` out of every
class, so ``m_alpha + m_beta + m_zero == |E| - 1``. ``AUGMENTED`` adds one
to each side count, so ``m_alpha + m_beta + m_zero == |E| + 1`` and both
sides are always positive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .distance import (
    UNREACHABLE,
    DistanceMatrix,
    all_pairs_distances,
    vertex_edge_matrix,
)
from .errors import DisconnectedGraph, ParameterOutOfRange
from .graph import Edge, Graph


class Convention(str, enum.Enum):
    STRICT = "strict"
    AUGMENTED = "augmented"

    @classmethod
    def parse(cls, value: "Convention | str") -> "Convention":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown convention {value!r}") from None

    @property
    def side_offset(self) -> int:
        return 1 if self is Convention.AUGMENTED else 0


STRICT = Convention.STRICT
AUGMENTED = Convention.AUGMENTED


@dataclass(frozen=True)
class EdgeBalanceCounts:
    alpha: int
    beta: int
    n_alpha: int
    n_beta: int
    n_zero: int
    m_alpha: int
    m_beta: int
    m_zero: int
    convention: Convention = STRICT

    @property
    def edge(self) -> Edge:
        return (self.alpha, self.beta)

    @property
    def vertex_pair(self) -> tuple[int, int]:
        return (self.n_alpha, self.n_beta)

    @property
    def edge_pair(self) -> tuple[int, int]:
        return (self.m_alpha, self.m_beta)

    def swapped(self) -> "EdgeBalanceCounts":
        return EdgeBalanceCounts(
            self.beta, self.alpha,
            self.n_beta, self.n_alpha, self.n_zero,
            self.m_beta, self.m_alpha, self.m_zero,
            self.convention,
        )

    def to_dict(self) -> dict:
        return {
            "edge": [self.alpha, self.beta],
            "n_alpha": self.n_alpha, "n_beta": self.n_beta, "n_zero": self.n_zero,
            "m_alpha": self.m_alpha, "m_beta": self.m_beta, "m_zero": self.m_zero,
        }


@dataclass(frozen=True)
class EdgePartition:
    """Edges other than the base edge, bucketed by ``(d(g, alpha), d(g, beta))``."""

    alpha: int
    beta: int
    cells: dict[tuple[int, int], tuple[Edge, ...]] = field(default_factory=dict)

    def size(self, i: int, j: int) -> int:
        return len(self.cells.get((i, j), ()))

    def toward_alpha(self, level: int) -> int:
        """Edges at distance ``level - 1`` from alpha and ``level`` from beta."""
        return self.size(level - 1, level)

    def toward_beta(self, level: int) -> int:
        return self.size(level, level - 1)

    def swapped(self) -> "EdgePartition":
        return EdgePartition(self.beta, self.alpha,
                             {(j, i): es for (i, j), es in self.cells.items()})

    def sizes(self) -> dict[tuple[int, int], int]:
        return {k: len(v) for k, v in sorted(self.cells.items())}


def _distances(graph: Graph, dist: Optional[DistanceMatrix]) -> DistanceMatrix:
    if dist is None:
        dist = all_pairs_distances(graph)
    if dist.size and (dist == UNREACHABLE).any():
        raise DisconnectedGraph(f"{graph!r} is not connected")
    return dist


def _oriented(graph: Graph, f: Edge) -> Edge:
    a, b = int(f[0]), int(f[1])
    if not graph.has_edge(a, b):
        raise KeyError(f"({a}, {b}) is not an edge of {graph!r}")
    return a, b


def vertex_counts(graph: Graph, f: Edge, dist: Optional[DistanceMatrix] = None) -> tuple[int, int, int]:
    """``(n_alpha, n_beta, n_zero)`` for ``f`` oriented as given."""
    dist = _distances(graph, dist)
    a, b = _oriented(graph, f)
    da, db = dist[a], dist[b]
    n_a = int(np.count_nonzero(da < db))
    n_b = int(np.count_nonzero(db < da))
    return n_a, n_b, graph.n - n_a - n_b


def edge_counts(
    graph: Graph,
    f: Edge,
    convention: Convention | str = STRICT,
    dist: Optional[DistanceMatrix] = None,
) -> tuple[int, int, int]:
    """``(m_alpha, m_beta, m_zero)`` for ``f`` oriented as given."""
    convention = Convention.parse(convention)
    dist = _distances(graph, dist)
    a, b = _oriented(graph, f)
    ve = vertex_edge_matrix(graph, dist)
    da, db = ve[a], ve[b]
    m_a = int(np.count_nonzero(da < db))
    m_b = int(np.count_nonzero(db < da))
    # f is equidistant (0, 0) from its own endpoints
    m_0 = graph.m - m_a - m_b - 1
    off = convention.side_offset
    return m_a + off, m_b + off, m_0


def edge_balance(
    graph: Graph,
    f: Edge,
    convention: Convention | str = STRICT,
    dist: Optional[DistanceMatrix] = None,
) -> EdgeBalanceCounts:
    convention = Convention.parse(convention)
    dist = _distances(graph, dist)
    n_a, n_b, n_0 = vertex_counts(graph, f, dist)
    m_a, m_b, m_0 = edge_counts(graph, f, convention, dist)
    return EdgeBalanceCounts(int(f[0]), int(f[1]), n_a, n_b, n_0, m_a, m_b, m_0, convention)


def edge_balance_table(
    graph: Graph,
    convention: Convention | str = STRICT,
    dist: Optional[DistanceMatrix] = None,
) -> list[EdgeBalanceCounts]:
    """Counts for every edge in storage order, computed in one vectorised pass."""
    convention = Convention.parse(convention)
    dist = _distances(graph, dist)
    if graph.m == 0:
        return []
    ends = np.asarray(graph.edges, dtype=np.intp)
    u, v = ends[:, 0], ends[:, 1]
    du, dv = dist[u], dist[v]
    n_a = np.count_nonzero(du < dv, axis=1)
    n_b = np.count_nonzero(dv < du, axis=1)
    ve = vertex_edge_matrix(graph, dist)
    eu, ev = ve[u], ve[v]
    m_a = np.count_nonzero(eu < ev, axis=1)
    m_b = np.count_nonzero(ev < eu, axis=1)
    off = convention.side_offset
    out = []
    for k, (a, b) in enumerate(graph.edges):
        ma, mb = int(m_a[k]), int(m_b[k])
        out.append(EdgeBalanceCounts(
            a, b,
            int(n_a[k]), int(n_b[k]), graph.n - int(n_a[k]) - int(n_b[k]),
            ma + off, mb + off, graph.m - ma - mb - 1,
            convention,
        ))
    return out


def distance_partition(graph: Graph, f: Edge, dist: Optional[DistanceMatrix] = None) -> EdgePartition:
    dist = _distances(graph, dist)
    a, b = _oriented(graph, f)
    base = graph.edge_index(a, b)
    ve = vertex_edge_matrix(graph, dist)
    cells: dict[tuple[int, int], list[Edge]] = {}
    for k, g in enumerate(graph.edges):
        if k == base:
            continue
        cells.setdefault((int(ve[a, k]), int(ve[b, k])), []).append(g)
    return EdgePartition(a, b, {key: tuple(es) for key, es in sorted(cells.items())})


def szeged_index(graph: Graph, dist: Optional[DistanceMatrix] = None) -> int:
    return sum(c.n_alpha * c.n_beta for c in edge_balance_table(graph, STRICT, dist))


def edge_szeged_index(
    graph: Graph,
    convention: Convention | str = STRICT,
    dist: Optional[DistanceMatrix] = None,
) -> int:
    return sum(c.m_alpha * c.m_beta for c in edge_balance_table(graph, convention, dist))


def claimed_edge_szeged(n: int, t: int) -> Fraction:
    """Closed form asserted for the edge-Szeged index of a bipartite
    generalized t-EDB graph: ``t * (tn + t + 1)^2 * t * n^2 / (t + 1)^2``.

    Exact rational, so a non-integral value is never rounded into agreement.
    """
    if n < 1 or t < 1:
        raise ParameterOutOfRange(f"need n, t >= 1, got n={n}, t={t}")
    return Fraction(t * (t * n + t + 1) ** 2 * t * n * n, (t + 1) ** 2)
