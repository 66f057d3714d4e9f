"""Standard graph families."""

from __future__ import annotations

from itertools import combinations

from .errors import ParameterOutOfRange
from .graph import Graph


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterOutOfRange(msg)


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q}: part X = ``0..p-1``, part Y = ``p..p+q-1``."""
    _need(p >= 1 and q >= 1, f"complete_bipartite needs p, q >= 1, got ({p}, {q})")
    return Graph(p + q, ((x, p + y) for x in range(p) for y in range(q)))


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def hypercube(d: int) -> Graph:
    """Q_d on bit-vector vertex ids; adjacent iff ids differ in one bit."""
    _need(d >= 1, f"hypercube needs d >= 1, got {d}")
    n = 1 << d
    return Graph(n, ((v, v ^ (1 << k)) for v in range(n) for k in range(d) if not v >> k & 1))


def empty(n: int) -> Graph:
    _need(n >= 0, f"empty needs n >= 0, got {n}")
    return Graph(n, ())


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return complete_bipartite(1, k)


FAMILIES = {
    "complete_bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "hypercube": (hypercube, 1),
    "empty": (empty, 1),
}


def generate(family: str, *params: int) -> Graph:
    """Dispatch by family name, e.g. ``generate("complete_bipartite", 2, 4)``."""
    try:
        fn, arity = FAMILIES[family]
    except KeyError:
        raise ParameterOutOfRange(
            f"unknown family {family!r}; choose from {sorted(FAMILIES)}"
        ) from None
    if len(params) != arity:
        raise ParameterOutOfRange(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*(int(p) for p in params))
