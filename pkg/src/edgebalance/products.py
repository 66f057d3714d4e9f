"""Cartesian and lexicographic graph products.

Product vertex ``(a, b)`` gets id ``a * |V(B)| + b`` in both constructions.
"""

from __future__ import annotations

from .errors import ProductTooLarge
from .graph import Graph

DEFAULT_VERTEX_BUDGET = 4096


def _check_budget(a: Graph, b: Graph, budget: int) -> None:
    if a.n * b.n > budget:
        raise ProductTooLarge(
            f"product would have {a.n * b.n} vertices, budget is {budget}"
        )


def pair_id(a: int, b: int, nb: int) -> int:
    return a * nb + b


def cartesian_product(a: Graph, b: Graph, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> Graph:
    """A □ B: equal in one coordinate and adjacent in the other."""
    _check_budget(a, b, vertex_budget)
    nb = b.n
    edges = []
    for x in range(a.n):
        for u, v in b.edges:
            edges.append((x * nb + u, x * nb + v))
    for u, v in a.edges:
        for y in range(nb):
            edges.append((u * nb + y, v * nb + y))
    return Graph(a.n * nb, edges)


def lexicographic_product(a: Graph, b: Graph, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> Graph:
    """A[B]: adjacent in A, or equal in A and adjacent in B."""
    _check_budget(a, b, vertex_budget)
    nb = b.n
    edges = []
    for x in range(a.n):
        for u, v in b.edges:
            edges.append((x * nb + u, x * nb + v))
    for u, v in a.edges:
        for y in range(nb):
            for z in range(nb):
                edges.append((u * nb + y, v * nb + z))
    return Graph(a.n * nb, edges)
