"""Canonical forms, exhaustive enumeration of small connected graphs, and
predicate search producing JSON-lines catalogs.

Canonical labelling is individualisation-refinement: vertices are split
into an ordered equitable partition, a vertex of the first non-singleton
cell is individualised, and the process recurses. The canonical form is
the smallest upper-triangle bit string (graph6 order) over all leaves.
Twin vertices in a cell are tried only once, which keeps complete and
complete-multipartite graphs cheap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterator, Optional, Sequence

from .classify import ClassificationReport, full_report, values_to_json
from .errors import ParameterOutOfRange, PredicateError, TooLargeForExactIso
from .graph import Graph
from .invariants import AUGMENTED, Convention
from .io import to_graph6, to_graph6_bytes

MAX_ISO_VERTICES = 10
MAX_ENUMERATION_ORDER = 8

CanonicalForm = bytes


def _refine(cells: list[list[int]], masks: Sequence[int]) -> list[list[int]]:
    while True:
        cell_masks = []
        for cell in cells:
            cm = 0
            for v in cell:
                cm |= 1 << v
            cell_masks.append(cm)
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple((masks[v] & cm).bit_count() for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                split = True
                out.extend(groups[k] for k in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not split:
            return cells


def _leaf_key(order: Sequence[int], masks: Sequence[int]) -> int:
    key = 0
    for j in range(1, len(order)):
        mj = masks[order[j]]
        for i in range(j):
            key = (key << 1) | ((mj >> order[i]) & 1)
    return key


def _canonical_order(n: int, masks: Sequence[int]) -> tuple[int, list[int]]:
    """Return ``(key, order)``: ``order[p]`` is the vertex placed at position ``p``."""
    best_key: Optional[int] = None
    best_order: list[int] = list(range(n))

    def twins(u: int, v: int) -> bool:
        return masks[u] & ~(1 << v) == masks[v] & ~(1 << u)

    def search(cells: list[list[int]]) -> None:
        nonlocal best_key, best_order
        idx = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if idx is None:
            order = [c[0] for c in cells]
            key = _leaf_key(order, masks)
            if best_key is None or key < best_key:
                best_key, best_order = key, order
            return
        cell = cells[idx]
        tried: list[int] = []
        for v in cell:
            if any(twins(v, u) for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(_refine(cells[:idx] + [[v], rest] + cells[idx + 1:], masks))

    if n:
        search(_refine([list(range(n))], masks))
    return (best_key or 0), best_order


def canonical_graph(graph: Graph, max_vertices: int = MAX_ISO_VERTICES) -> Graph:
    """The canonical relabelling of ``graph``; isomorphic inputs give equal outputs."""
    if graph.n > max_vertices:
        raise TooLargeForExactIso(f"exact isomorphism limited to {max_vertices} vertices, got {graph.n}")
    _, order = _canonical_order(graph.n, graph.adjacency_masks())
    position = [0] * graph.n
    for p, v in enumerate(order):
        position[v] = p
    return graph.relabel(position)


def canonical_form(graph: Graph, max_vertices: int = MAX_ISO_VERTICES) -> CanonicalForm:
    """graph6 bytes of :func:`canonical_graph`; equal iff the inputs are isomorphic."""
    return to_graph6_bytes(canonical_graph(graph, max_vertices))


def are_isomorphic(a: Graph, b: Graph, max_vertices: int = MAX_ISO_VERTICES) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a, max_vertices) == canonical_form(b, max_vertices)


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    # every connected graph on n vertices is a connected graph on n - 1
    # vertices plus one new vertex joined to a nonempty subset (drop a
    # leaf of a spanning tree to see this)
    found: dict[int, tuple[int, list[int], list[int]]] = {}
    new = n - 1
    for h in _connected_classes(n - 1):
        base = list(h.adjacency_masks()) + [0]
        for subset in range(1, 1 << new):
            masks = base.copy()
            masks[new] = subset
            for v in range(new):
                if subset >> v & 1:
                    masks[v] |= 1 << new
            key, order = _canonical_order(n, masks)
            if key not in found:
                found[key] = (key, order, masks)
    graphs = []
    for key, order, masks in found.values():
        position = [0] * n
        for p, v in enumerate(order):
            position[v] = p
        edges = [(position[u], position[v]) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1]
        graphs.append(Graph(n, edges))
    graphs.sort(key=lambda g: (g.m, to_graph6_bytes(g)))
    return tuple(graphs)


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs on ``n`` vertices.

    Order is by edge count, then canonical graph6 string.
    """
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ParameterOutOfRange(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")
    yield from _connected_classes(n)


def connected_class_count(n: int) -> int:
    return sum(1 for _ in enumerate_connected(n))


@dataclass(frozen=True)
class CatalogEntry:
    graph6: str
    n: int
    m: int
    report: ClassificationReport

    def to_dict(self) -> dict:
        r = self.report
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "diameter": r.diameter,
            "bipartite": r.bipartite,
            "gt_edb_values": values_to_json(r.gt_edb_values),
            "gt_db_values": values_to_json(r.gt_db_values),
            "gt_nedb": list(r.gt_nedb) if r.gt_nedb else None,
            "gt_sedb_values": values_to_json(r.gt_sedb_values),
            "convention": r.convention.value,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


@lru_cache(maxsize=None)
def classified(n: int, convention: Convention = AUGMENTED) -> tuple[tuple[Graph, ClassificationReport], ...]:
    """Every connected graph on ``n`` vertices with its report (cached)."""
    return tuple((g, full_report(g, convention)) for g in enumerate_connected(n))


def iter_atlas(n_max: int, convention: Convention | str = AUGMENTED, n_min: int = 1):
    convention = Convention.parse(convention)
    for n in range(n_min, n_max + 1):
        yield from classified(n, convention)


def search(
    predicate: Callable[[ClassificationReport], bool],
    n_max: int,
    convention: Convention | str = AUGMENTED,
    n_min: int = 1,
    out: Optional[str | Path] = None,
) -> list[CatalogEntry]:
    """All connected graphs on ``n_min..n_max`` vertices whose report satisfies ``predicate``.

    When ``out`` is given the catalog is also written there as JSON lines.
    """
    if n_max > MAX_ENUMERATION_ORDER:
        raise ParameterOutOfRange(f"n_max must be <= {MAX_ENUMERATION_ORDER}, got {n_max}")
    entries = [
        CatalogEntry(to_graph6(g), g.n, g.m, rep)
        for g, rep in iter_atlas(n_max, convention, n_min)
        if predicate(rep)
    ]
    if out is not None:
        write_catalog(entries, out)
    return entries


def write_catalog(entries: Sequence[CatalogEntry], path: str | Path) -> None:
    text = "".join(e.to_json() + "\n" for e in entries)
    Path(path).write_text(text, encoding="utf-8")


def read_catalog(path: str | Path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def _int_arg(word: str, value: Optional[str]) -> int:
    if value is None:
        raise PredicateError(f"{word} needs a value, e.g. {word}=2")
    try:
        return int(value)
    except ValueError:
        raise PredicateError(f"{word} expects an integer, got {value!r}") from None


def parse_predicate(expr: Optional[str]) -> Callable[[ClassificationReport], bool]:
    """Compile a conjunction of keywords into a report predicate.

    Terms are separated by commas or ``and``: ``true``, ``false``,
    ``bipartite``, ``nonbipartite``, ``diameter=K``, ``gt_db=T``,
    ``gt_edb=T``, ``gt_sedb=T``, ``gt_nedb`` and ``gt_nedb=T``.
    An empty expression accepts everything.
    """
    if expr is None or not expr.strip():
        return lambda rep: True
    terms = [t.strip() for part in expr.split(",") for t in part.split(" and ")]
    tests: list[Callable[[ClassificationReport], bool]] = []
    for term in filter(None, terms):
        word, _, value = term.partition("=")
        word = word.strip().lower()
        value = value.strip() if _ else None
        if word == "true" and value is None:
            tests.append(lambda rep: True)
        elif word == "false" and value is None:
            tests.append(lambda rep: False)
        elif word == "bipartite" and value is None:
            tests.append(lambda rep: rep.bipartite)
        elif word == "nonbipartite" and value is None:
            tests.append(lambda rep: not rep.bipartite)
        elif word == "diameter":
            k = _int_arg(word, value)
            tests.append(lambda rep, k=k: rep.diameter == k)
        elif word in ("gt_db", "gt_edb", "gt_sedb"):
            t = _int_arg(word, value)
            attr = word + "_values"
            tests.append(lambda rep, t=t, attr=attr: t in getattr(rep, attr))
        elif word == "gt_nedb":
            if value is None:
                tests.append(lambda rep: rep.gt_nedb is not None)
            else:
                t = _int_arg(word, value)
                tests.append(lambda rep, t=t: rep.gt_nedb is not None
                             and (rep.gt_nedb[0] == t or rep.gt_nedb[1] == 0))
        else:
            raise PredicateError(f"unknown predicate term {term!r}")
    return lambda rep: all(test(rep) for test in tests)
