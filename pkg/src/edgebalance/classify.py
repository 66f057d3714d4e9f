"""Membership tests for the (generalized) distance-balanced graph classes.

A graph is *t-balanced* on a per-edge count pair ``(x, y)`` when
``x == t*y`` or ``y == t*x``; the orientation is chosen per edge. The
vertex pairs ``(n_alpha, n_beta)`` give the DB family, the edge pairs
``(m_alpha, m_beta)`` the EDB family. ``t = 1`` is included everywhere so
that plain DB and EDB are the ``1 in values`` special case. Plain SEDB
(:func:`is_sedb`) balances every level up to the diameter, whereas the
generalized variant stops one level short; the two differ on a handful of
graphs.

Every ``*_values`` function returns either a frozenset of admissible
``t >= 1`` or :data:`ALL_T` when every positive ``t`` qualifies (only
possible for graphs with at most one edge, or diameter 1 for SEDB).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from .distance import DistanceMatrix, diameter as _diameter, vertex_edge_matrix
from .graph import Graph, is_bipartite
from .invariants import (
    AUGMENTED,
    STRICT,
    Convention,
    EdgeBalanceCounts,
    _distances,
    edge_balance_table,
)


class AllT:
    """Stands for the set of every positive integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __contains__(self, t) -> bool:
        return isinstance(t, (int, np.integer)) and t >= 1

    def __repr__(self):
        return "ALL_T"

    def __reduce__(self):
        return (AllT, ())


ALL_T = AllT()
TValues = Union[frozenset, AllT]


def ratio_values(x: int, y: int) -> Optional[frozenset]:
    """Integers ``t >= 1`` with ``x == t*y`` or ``y == t*x``; ``None`` means all."""
    if x == 0 and y == 0:
        return None
    lo, hi = min(x, y), max(x, y)
    if lo == 0 or hi % lo:
        return frozenset()
    return frozenset({hi // lo})


def _intersect(sets: Iterable[Optional[frozenset]]) -> TValues:
    acc: Optional[frozenset] = None
    for s in sets:
        if s is None:
            continue
        acc = s if acc is None else acc & s
        if not acc:
            return frozenset()
    return ALL_T if acc is None else acc


def values_to_json(values: TValues) -> Union[list, str]:
    return "all" if values is ALL_T else sorted(int(t) for t in values)


def _table(graph, convention, dist) -> list[EdgeBalanceCounts]:
    return edge_balance_table(graph, convention, dist)


def gt_db_values(graph: Graph, dist: Optional[DistanceMatrix] = None) -> TValues:
    return _intersect(ratio_values(c.n_alpha, c.n_beta) for c in _table(graph, STRICT, dist))


def is_gt_db(graph: Graph, t: int, dist: Optional[DistanceMatrix] = None) -> bool:
    return t in gt_db_values(graph, dist)


def gt_edb_values(
    graph: Graph,
    convention: Convention | str = AUGMENTED,
    dist: Optional[DistanceMatrix] = None,
) -> TValues:
    return _intersect(ratio_values(c.m_alpha, c.m_beta) for c in _table(graph, convention, dist))


def is_gt_edb(
    graph: Graph,
    t: int,
    convention: Convention | str = AUGMENTED,
    dist: Optional[DistanceMatrix] = None,
) -> bool:
    return t in gt_edb_values(graph, convention, dist)


def _constant_pair(pairs: Iterable[tuple[int, int]], allow_zero: bool) -> Optional[tuple[int, int]]:
    distinct = {(min(x, y), max(x, y)) for x, y in pairs}
    if len(distinct) != 1:
        return None
    lo, hi = distinct.pop()
    if lo == 0:
        return (1, 0) if hi == 0 and allow_zero else None
    if hi % lo:
        return None
    return hi // lo, lo


def gt_nedb(
    graph: Graph,
    convention: Convention | str = AUGMENTED,
    dist: Optional[DistanceMatrix] = None,
) -> Optional[tuple[int, int]]:
    """``(t, gamma')`` when every edge has edge-count pair ``{gamma', t*gamma'}``.

    ``gamma'`` is the smaller side count. ``gamma' = 0`` (with ``t = 1``) can
    only occur under STRICT, for K_2. Edgeless graphs return ``None``.
    """
    convention = Convention.parse(convention)
    return _constant_pair((c.edge_pair for c in _table(graph, convention, dist)),
                          allow_zero=convention is STRICT)


def is_gt_nedb(
    graph: Graph,
    t: int,
    convention: Convention | str = AUGMENTED,
    dist: Optional[DistanceMatrix] = None,
) -> bool:
    found = gt_nedb(graph, convention, dist)
    if found is None:
        return False
    return found[1] == 0 or found[0] == t


def gt_ndb(graph: Graph, dist: Optional[DistanceMatrix] = None) -> Optional[tuple[int, int]]:
    """Vertex-side analogue of :func:`gt_nedb`: ``(t, gamma)`` or ``None``."""
    return _constant_pair((c.vertex_pair for c in _table(graph, STRICT, dist)), allow_zero=False)


def is_gt_ndb(graph: Graph, t: int, dist: Optional[DistanceMatrix] = None) -> bool:
    found = gt_ndb(graph, dist)
    return found is not None and found[0] == t


def level_counts(graph: Graph, dist: Optional[DistanceMatrix] = None) -> list[list[tuple[int, int]]]:
    """Per edge (storage orientation), the list over ``i = 1..diameter`` of
    ``(#edges at (i-1, i), #edges at (i, i-1))`` in (alpha-distance, beta-distance).
    """
    dist = _distances(graph, dist)
    d = _diameter(dist)
    ve = vertex_edge_matrix(graph, dist)
    out = []
    for a, b in graph.edges:
        da, db = ve[a], ve[b]
        levels = []
        for i in range(1, d + 1):
            toward_a = int(np.count_nonzero((da == i - 1) & (db == i)))
            toward_b = int(np.count_nonzero((da == i) & (db == i - 1)))
            levels.append((toward_a, toward_b))
        out.append(levels)
    return out


def _sedb_orientation_values(levels: list[tuple[int, int]]) -> Optional[frozenset]:
    # near = t * far + (t - 1)  <=>  near + 1 = t * (far + 1)
    t_found = None
    for near, far in levels:
        if (near + 1) % (far + 1):
            return frozenset()
        t = (near + 1) // (far + 1)
        if t_found is not None and t != t_found:
            return frozenset()
        t_found = t
    return None if t_found is None else frozenset({t_found})


def gt_sedb_values(
    graph: Graph,
    dist: Optional[DistanceMatrix] = None,
    max_level: Optional[int] = None,
) -> TValues:
    """Values of ``t`` for which every edge has one orientation satisfying
    ``|cell(i-1, i)| == t*|cell(i, i-1)| + (t - 1)`` at every level ``i`` in
    ``1..max_level``.

    ``max_level`` defaults to ``diameter - 1``. Pass ``diameter`` to include
    the outermost level as well.
    """
    dist = _distances(graph, dist)
    d = _diameter(dist)
    top = d - 1 if max_level is None else max_level
    per_edge = []
    for levels in level_counts(graph, dist):
        used = levels[:max(top, 0)]
        fwd = _sedb_orientation_values(used)
        bwd = _sedb_orientation_values([(y, x) for x, y in used])
        if fwd is None or bwd is None:
            per_edge.append(None)
        else:
            per_edge.append(fwd | bwd)
    return _intersect(per_edge)


def is_sedb(graph: Graph, dist: Optional[DistanceMatrix] = None) -> bool:
    """Strongly edge distance-balanced: cells ``(i-1, i)`` and ``(i, i-1)``
    have equal size at every level ``i = 1..diameter``."""
    dist = _distances(graph, dist)
    return 1 in gt_sedb_values(graph, dist, max_level=_diameter(dist))


def is_gt_sedb(
    graph: Graph,
    t: int,
    dist: Optional[DistanceMatrix] = None,
    max_level: Optional[int] = None,
) -> bool:
    return t in gt_sedb_values(graph, dist, max_level)


@dataclass(frozen=True)
class ClassificationReport:
    convention: Convention
    n: int
    m: int
    diameter: int
    bipartite: bool
    db: bool
    sedb: bool
    gt_db_values: TValues
    gt_edb_values: TValues
    gt_nedb: Optional[tuple[int, int]]
    gt_ndb: Optional[tuple[int, int]]
    gt_sedb_values: TValues
    per_edge_counts: tuple[EdgeBalanceCounts, ...]

    @property
    def edb(self) -> bool:
        return 1 in self.gt_edb_values

    def to_dict(self, include_edges: bool = True) -> dict:
        out = {
            "convention": self.convention.value,
            "n": self.n,
            "m": self.m,
            "diameter": self.diameter,
            "bipartite": self.bipartite,
            "db": self.db,
            "edb": self.edb,
            "sedb": self.sedb,
            "gt_db_values": values_to_json(self.gt_db_values),
            "gt_edb_values": values_to_json(self.gt_edb_values),
            "gt_nedb": list(self.gt_nedb) if self.gt_nedb else None,
            "gt_ndb": list(self.gt_ndb) if self.gt_ndb else None,
            "gt_sedb_values": values_to_json(self.gt_sedb_values),
        }
        if include_edges:
            out["per_edge_counts"] = [c.to_dict() for c in self.per_edge_counts]
        return out


def full_report(
    graph: Graph,
    convention: Convention | str = AUGMENTED,
    dist: Optional[DistanceMatrix] = None,
) -> ClassificationReport:
    convention = Convention.parse(convention)
    dist = _distances(graph, dist)
    table = edge_balance_table(graph, convention, dist)
    db_vals = _intersect(ratio_values(c.n_alpha, c.n_beta) for c in table)
    edb_vals = _intersect(ratio_values(c.m_alpha, c.m_beta) for c in table)
    return ClassificationReport(
        convention=convention,
        n=graph.n,
        m=graph.m,
        diameter=_diameter(dist),
        bipartite=is_bipartite(graph)[0],
        db=1 in db_vals,
        sedb=is_sedb(graph, dist),
        gt_db_values=db_vals,
        gt_edb_values=edb_vals,
        gt_nedb=_constant_pair((c.edge_pair for c in table), allow_zero=convention is STRICT),
        gt_ndb=_constant_pair((c.vertex_pair for c in table), allow_zero=False),
        gt_sedb_values=gt_sedb_values(graph, dist),
        per_edge_counts=tuple(table),
    )
