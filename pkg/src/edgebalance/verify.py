"""Claim audit: each check evaluates both sides of a published claim by
brute force on concrete graphs.

Verdicts:

``PASS``
    the claim held on every instance examined.
``COUNTEREXAMPLE``
    some instance contradicts a membership or implication claim.
``DISCREPANCY``
    a closed-form formula disagrees with the brute-force value.

Every non-PASS verdict carries witnesses with the graph6 string, the edge
(where relevant) and the numbers on both sides, so each one can be
re-derived independently. Claim verdicts are data: nothing here raises on
a failed claim.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from . import __version__
from .atlas import MAX_ENUMERATION_ORDER, are_isomorphic, iter_atlas
from .classify import (
    ALL_T,
    gt_db_values,
    gt_edb_values,
    gt_ndb,
    gt_nedb,
    gt_sedb_values,
    values_to_json,
)
from .errors import BudgetExceeded
from .generators import complete, complete_bipartite, cycle, empty, path, star
from .graph import Graph
from .invariants import (
    AUGMENTED,
    STRICT,
    Convention,
    claimed_edge_szeged,
    edge_balance_table,
    edge_szeged_index,
)
from .io import to_graph6
from .products import cartesian_product, lexicographic_product

PASS = "PASS"
COUNTEREXAMPLE = "COUNTEREXAMPLE"
DISCREPANCY = "DISCREPANCY"

CHECK_IDS = tuple(f"C{k}" for k in range(1, 13))
CONVENTIONS = (STRICT, AUGMENTED)

NAMED_GRAPHS: dict[str, Callable[[], Graph]] = {
    "K2": lambda: complete(2),
    "P3": lambda: path(3),
    "C4": lambda: cycle(4),
    "K1,2": lambda: star(2),
    "C5": lambda: cycle(5),
    "K2,3": lambda: complete_bipartite(2, 3),
    "K2,4": lambda: complete_bipartite(2, 4),
    "K1,3": lambda: star(3),
    "K3": lambda: complete(3),
}


@dataclass(frozen=True)
class VerifyConfig:
    atlas_n_max: int = 7
    kn_tn_n: tuple[int, ...] = (1, 2, 3, 4)
    kn_tn_t: tuple[int, ...] = (1, 2, 3, 4)
    szeged_t: tuple[int, ...] = (2, 3, 4)
    product_corpus: tuple[str, ...] = ("K2", "P3", "C4", "K1,2", "C5", "K2,3")
    product_t: tuple[int, ...] = (1, 2, 3)
    lex_corpus: tuple[str, ...] = ("K2", "P3", "C4", "K1,2", "C5", "K2,3", "K2,4", "K1,3")
    lex_empty_orders: tuple[int, ...] = (1, 2, 3)
    lex_edged_factors: tuple[str, ...] = ("K2", "P3", "K3")
    witness_limit: int = 10

    def validate(self) -> None:
        if not 1 <= self.atlas_n_max <= MAX_ENUMERATION_ORDER:
            raise BudgetExceeded(
                f"atlas budget must be in [1, {MAX_ENUMERATION_ORDER}], got {self.atlas_n_max}"
            )
        unknown = set(self.product_corpus + self.lex_corpus + self.lex_edged_factors) - set(NAMED_GRAPHS)
        if unknown:
            raise ValueError(f"unknown corpus graphs: {sorted(unknown)}")

    def to_dict(self) -> dict:
        return {
            "atlas_n_max": self.atlas_n_max,
            "kn_tn_n": list(self.kn_tn_n),
            "kn_tn_t": list(self.kn_tn_t),
            "szeged_t": list(self.szeged_t),
            "product_corpus": list(self.product_corpus),
            "product_t": list(self.product_t),
            "lex_corpus": list(self.lex_corpus),
            "lex_empty_orders": list(self.lex_empty_orders),
            "lex_edged_factors": list(self.lex_edged_factors),
            "witness_limit": self.witness_limit,
        }


@dataclass
class CheckResult:
    check_id: str
    claim: str
    instances: str
    instance_count: int
    verdict: str
    conventions: tuple[str, ...]
    witnesses: list[dict] = field(default_factory=list)
    witness_total: int = 0
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "id": self.check_id,
            "claim": self.claim,
            "instances": self.instances,
            "instance_count": self.instance_count,
            "verdict": self.verdict,
            "conventions": list(self.conventions),
            "witnesses": self.witnesses,
            "witness_total": self.witness_total,
            "details": self.details,
        }


class _Witnesses:
    def __init__(self, limit: int):
        self.limit = limit
        self.items: list[dict] = []
        self.total = 0

    def add(self, graph: Optional[Graph] = None, **values) -> None:
        self.total += 1
        if len(self.items) < self.limit:
            item = {"graph6": to_graph6(graph)} if graph is not None else {}
            item.update(values)
            self.items.append(_jsonable(item))

    def __bool__(self):
        return self.total > 0


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Convention):
        return obj.value
    if isinstance(obj, frozenset) or obj is ALL_T:
        return values_to_json(obj)
    return obj


def _result(check_id, claim, instances, count, witnesses, conventions, bad_verdict, details=None):
    return CheckResult(
        check_id=check_id,
        claim=claim,
        instances=instances,
        instance_count=count,
        verdict=bad_verdict if witnesses else PASS,
        conventions=tuple(c.value for c in conventions),
        witnesses=witnesses.items,
        witness_total=witnesses.total,
        details=_jsonable(details or {}),
    )


@lru_cache(maxsize=None)
def _named(name: str) -> Graph:
    return NAMED_GRAPHS[name]()


@lru_cache(maxsize=None)
def _cart(a: str, b: str) -> Graph:
    return cartesian_product(_named(a), _named(b))


@lru_cache(maxsize=4096)
def _table(graph: Graph, convention: Convention):
    return tuple(edge_balance_table(graph, convention))


@lru_cache(maxsize=4096)
def _edb(graph: Graph, convention: Convention):
    return gt_edb_values(graph, convention)


@lru_cache(maxsize=4096)
def _db(graph: Graph):
    return gt_db_values(graph)


def _orientations_with_ratio(c, t: int):
    """Orientations ``(alpha, beta)`` of an edge whose edge counts satisfy m_alpha == t*m_beta."""
    out = []
    if c.m_alpha == t * c.m_beta:
        out.append(c)
    if c.m_beta == t * c.m_alpha and (t != 1 or not out):
        out.append(c.swapped())
    return out


# ---------------------------------------------------------------- checks


def check_c1(cfg: VerifyConfig) -> CheckResult:
    wit = _Witnesses(cfg.witness_limit)
    counts = {}
    count = 0
    for n in cfg.kn_tn_n:
        for t in cfg.kn_tn_t:
            g = complete_bipartite(n, t * n)
            count += 1
            pairs = sorted({c.edge_pair for c in _table(g, AUGMENTED)})
            counts[f"n={n},t={t}"] = [list(p) for p in pairs]
            for c in _table(g, AUGMENTED):
                if c.edge_pair != (t * n, n):
                    wit.add(g, n=n, t=t, edge=c.edge, computed=c.edge_pair, claimed=(t * n, n))
            vals = _edb(g, AUGMENTED)
            if t not in vals:
                wit.add(g, n=n, t=t, gt_edb_values=vals)
    return _result(
        "C1",
        "every edge of K(n,tn) has augmented edge counts (tn, n), so K(n,tn) is t-edge balanced",
        f"K(n,tn) for n in {list(cfg.kn_tn_n)}, t in {list(cfg.kn_tn_t)}",
        count, wit, (AUGMENTED,), COUNTEREXAMPLE, {"edge_count_pairs": counts},
    )


def _bipartite_diameter_two(cfg: VerifyConfig):
    return [(g, rep) for g, rep in iter_atlas(cfg.atlas_n_max, AUGMENTED)
            if rep.bipartite and rep.diameter == 2]


def check_c2(cfg: VerifyConfig) -> CheckResult:
    wit = _Witnesses(cfg.witness_limit)
    count = checked = 0
    for g, rep in _bipartite_diameter_two(cfg):
        if rep.gt_edb_values is ALL_T or not rep.gt_edb_values:
            continue
        count += 1
        for t in sorted(rep.gt_edb_values):
            for c in rep.per_edge_counts:
                for o in _orientations_with_ratio(c, t):
                    checked += 1
                    da, db = g.degree(o.alpha), g.degree(o.beta)
                    if da != t * db:
                        wit.add(g, t=t, edge=o.edge, m=(o.m_alpha, o.m_beta), degrees=(da, db))
    return _result(
        "C2",
        "in a bipartite diameter-2 t-edge balanced graph, deg(alpha) = t deg(beta) "
        "whenever m_alpha = t m_beta",
        f"connected bipartite diameter-2 atlas graphs on <= {cfg.atlas_n_max} vertices "
        "with a t-edge balance (augmented)",
        count, wit, (AUGMENTED,), COUNTEREXAMPLE, {"oriented_edges_checked": checked},
    )


def complete_bipartite_class_count(n_max: int) -> int:
    """Number of K(p,q), p <= q, with diameter 2 and p + q <= n_max."""
    return sum(1 for p in range(1, n_max + 1) for q in range(max(p, 2), n_max + 1) if p + q <= n_max)


def check_c3(cfg: VerifyConfig) -> CheckResult:
    wit = _Witnesses(cfg.witness_limit)
    scanned = _bipartite_diameter_two(cfg)
    generalized = []
    for g, rep in scanned:
        ts = [] if rep.gt_edb_values is ALL_T else [t for t in sorted(rep.gt_edb_values) if t >= 2]
        for t in ts:
            generalized.append(to_graph6(g))
            if g.n % (t + 1):
                wit.add(g, t=t, reason="vertex count not divisible by t+1")
                continue
            m = g.n // (t + 1)
            if not are_isomorphic(g, complete_bipartite(m, t * m)):
                wit.add(g, t=t, expected=f"K({m},{t * m})")
    oracle = complete_bipartite_class_count(cfg.atlas_n_max)
    details = {
        "scanned": len(scanned),
        "complete_bipartite_oracle_count": oracle,
        "scan_matches_oracle": len(scanned) == oracle,
        "generalized_instances": generalized,
    }
    if len(scanned) != oracle:
        wit.add(None, reason="scanned instance count differs from oracle",
                scanned=len(scanned), oracle=oracle)
    return _result(
        "C3",
        "a bipartite diameter-2 graph that is t-edge balanced for some t >= 2 is K(m,tm)",
        f"all connected bipartite diameter-2 graphs on <= {cfg.atlas_n_max} vertices",
        len(scanned), wit, (AUGMENTED,), COUNTEREXAMPLE, details,
    )


def check_c4(cfg: VerifyConfig) -> CheckResult:
    wit = _Witnesses(cfg.witness_limit)
    rows = {}
    count = 0
    for n in cfg.kn_tn_n:
        for t in cfg.szeged_t:
            g = complete_bipartite(n, t * n)
            count += 1
            formula = claimed_edge_szeged(n, t)
            strict = edge_szeged_index(g, STRICT)
            aug = edge_szeged_index(g, AUGMENTED)
            rows[f"n={n},t={t}"] = {"strict": strict, "augmented": aug, "formula": formula}
            if formula not in (strict, aug):
                wit.add(g, n=n, t=t, strict=strict, augmented=aug, formula=formula,
                        formula_minus_strict=formula - strict,
                        formula_minus_augmented=formula - aug,
                        formula_integral=formula.denominator == 1)
    return _result(
        "C4",
        "edge-Szeged index of a bipartite t-edge balanced graph equals "
        "t (tn+t+1)^2 t n^2 / (t+1)^2",
        f"K(n,tn) for n in {list(cfg.kn_tn_n)}, t in {list(cfg.szeged_t)}",
        count, wit, CONVENTIONS, DISCREPANCY, {"values": rows},
    )


def _cartesian_formula(a: Graph, b: Graph, p: Graph, c) -> tuple[int, int]:
    """Predicted STRICT (m_alpha, m_beta) of product edge ``c`` from factor counts."""
    nb = b.n
    (a1, b1), (a2, b2) = divmod(c.alpha, nb), divmod(c.beta, nb)
    if b1 == b2:
        f = _table(a, STRICT)[a.edge_index(a1, a2)]
        return f.m_alpha * b.n + f.n_alpha * b.m, f.m_beta * b.n + f.n_beta * b.m
    f = _table(b, STRICT)[b.edge_index(b1, b2)]
    return f.m_alpha * a.n + f.n_alpha * a.m, f.m_beta * a.n + f.n_beta * a.m


def check_c5(cfg: VerifyConfig) -> CheckResult:
    wit = _Witnesses(cfg.witness_limit)
    products = edges = 0
    for an in cfg.product_corpus:
        for bn in cfg.product_corpus:
            a, b = _named(an), _named(bn)
            p = _cart(an, bn)
            products += 1
            for c in _table(p, STRICT):
                edges += 1
                predicted = _cartesian_formula(a, b, p, c)
                if predicted != c.edge_pair:
                    wit.add(p, factors=(an, bn), edge=c.edge, computed=c.edge_pair, formula=predicted)
    return _result(
        "C5",
        "strict m-counts of an edge of A x B (cartesian) equal m^A |V(B)| + n^A |E(B)| "
        "for A-edges and m^B |V(A)| + n^B |E(A)| for B-edges",
        f"all ordered pairs from {list(cfg.product_corpus)}",
        products, wit, (STRICT,), DISCREPANCY, {"product_edges_checked": edges},
    )


def _aligned(graph: Graph, t: int, convention: Convention) -> bool:
    """Every edge has one orientation with m_alpha = t m_beta and n_alpha = t n_beta."""
    for c in _table(graph, convention):
        fwd = c.m_alpha == t * c.m_beta and c.n_alpha == t * c.n_beta
        bwd = c.m_beta == t * c.m_alpha and c.n_beta == t * c.n_alpha
        if not (fwd or bwd):
            return False
    return True


def check_c6(cfg: VerifyConfig) -> CheckResult:
    wit = _Witnesses(cfg.witness_limit)
    summary = {}
    count = 0
    for conv in CONVENTIONS:
        tally = {"forward_failures": 0, "converse_failures": 0,
                 "aligned_forward_failures": 0, "aligned_converse_failures": 0, "cases": 0}
        for an in cfg.product_corpus:
            for bn in cfg.product_corpus:
                a, b, p = _named(an), _named(bn), _cart(an, bn)
                lhs_vals = _edb(p, conv)
                for t in cfg.product_t:
                    tally["cases"] += 1
                    lhs = t in lhs_vals
                    factors_ok = all(t in _edb(x, conv) and t in _db(x) for x in (a, b))
                    aligned = _aligned(a, t, conv) and _aligned(b, t, conv)
                    case = dict(factors=(an, bn), t=t, convention=conv, product_balanced=lhs,
                                factors_balanced=factors_ok, factors_aligned=aligned)
                    if factors_ok and not lhs:
                        tally["forward_failures"] += 1
                        wit.add(p, direction="factors => product", **case)
                    if lhs and not factors_ok:
                        tally["converse_failures"] += 1
                        wit.add(p, direction="product => factors", **case)
                    if aligned and not lhs:
                        tally["aligned_forward_failures"] += 1
                    if lhs and not aligned:
                        tally["aligned_converse_failures"] += 1
        count += tally["cases"]
        summary[conv.value] = tally
    return _result(
        "C6",
        "A x B (cartesian) is t-edge balanced iff A and B are both t-edge balanced "
        "and t-vertex balanced",
        f"ordered pairs from {list(cfg.product_corpus)}, t in {list(cfg.product_t)}, both conventions",
        count, wit, CONVENTIONS, COUNTEREXAMPLE,
        {"per_convention": summary,
         "aligned_reading": "edge and vertex ratios realised by the same orientation on every factor edge"},
    )


def check_c7(cfg: VerifyConfig) -> CheckResult:
    wit = _Witnesses(cfg.witness_limit)
    summary = {}
    count = 0
    for conv in CONVENTIONS:
        tally = {"forward_cases": 0, "membership_failures": 0, "scaling_failures": 0,
                 "reverse_cases": 0, "reverse_generalized": 0, "reverse_edb": 0}
        for an in cfg.lex_corpus:
            a = _named(an)
            vals = _edb(a, conv)
            ts = list(cfg.product_t) if vals is ALL_T else sorted(vals)
            for k in cfg.lex_empty_orders:
                lex = lexicographic_product(a, empty(k))
                lex_vals = _edb(lex, conv)
                lex_table = _table(lex, conv)
                for t in ts:
                    tally["forward_cases"] += 1
                    if t not in lex_vals:
                        tally["membership_failures"] += 1
                        wit.add(lex, part="forward", factor=an, empty_order=k, t=t,
                                convention=conv, product_values=lex_vals)
                a_table = _table(a, conv)
                for c in lex_table:
                    # ids are a*k + b, so alpha < beta already orients the A-edge as stored
                    f = a_table[a.edge_index(c.alpha // k, c.beta // k)]
                    want = (k * f.m_alpha, k * f.m_beta)
                    if c.edge_pair != want:
                        tally["scaling_failures"] += 1
                        wit.add(lex, part="scaling", factor=an, empty_order=k, edge=c.edge,
                                convention=conv, computed=c.edge_pair, claimed=want)
            for bn in cfg.lex_edged_factors:
                lex = lexicographic_product(a, _named(bn))
                tally["reverse_cases"] += 1
                lex_vals = _edb(lex, conv)
                gen = [] if lex_vals is ALL_T else [t for t in sorted(lex_vals) if t >= 2]
                if 1 in lex_vals:
                    tally["reverse_edb"] += 1
                if gen:
                    tally["reverse_generalized"] += 1
                    wit.add(lex, part="reverse", factors=(an, bn), convention=conv, product_values=gen)
        count += tally["forward_cases"] + tally["reverse_cases"]
        summary[conv.value] = tally
    return _result(
        "C7",
        "A[B] (lexicographic) is t-edge balanced iff A is and B has no edges, with "
        "m-counts of A[B] equal to |V(B)| times those of A",
        f"A from {list(cfg.lex_corpus)}; B empty of order {list(cfg.lex_empty_orders)} "
        f"or from {list(cfg.lex_edged_factors)}",
        count, wit, CONVENTIONS, COUNTEREXAMPLE, {"per_convention": summary},
    )


def _nedb_instances(cfg: VerifyConfig, conv: Convention):
    for g, rep in iter_atlas(cfg.atlas_n_max, conv):
        if rep.gt_nedb is not None:
            yield g, rep


def check_c8(cfg: VerifyConfig) -> CheckResult:
    wit = _Witnesses(cfg.witness_limit)
    summary = {}
    count = 0
    for conv in CONVENTIONS:
        shift = -1 if conv is STRICT else 1
        graphs = literal_misses = 0
        for g, rep in _nedb_instances(cfg, conv):
            graphs += 1
            t, gamma = rep.gt_nedb
            expected = g.m - (t + 1) * gamma + shift
            literal = g.m - (t + 1) * gamma - 1
            for c in rep.per_edge_counts:
                if c.m_zero != literal:
                    literal_misses += 1
                if c.m_zero != expected:
                    wit.add(g, convention=conv, t=t, gamma_prime=gamma, edge=c.edge,
                            m_zero=c.m_zero, expected=expected)
        count += graphs
        summary[conv.value] = {"instances": graphs, "edges_missing_printed_formula": literal_misses,
                               "identity": f"m_zero = |E| - (t+1) gamma' {'-' if shift < 0 else '+'} 1"}
    return _result(
        "C8",
        "in a t-nicely edge balanced graph every edge has m_zero = |E| - (t+1) gamma' - 1 "
        "(checked with the accounting identity of each convention)",
        f"nicely edge balanced atlas graphs on <= {cfg.atlas_n_max} vertices, both conventions",
        count, wit, CONVENTIONS, COUNTEREXAMPLE, {"per_convention": summary},
    )


def check_c9(cfg: VerifyConfig) -> CheckResult:
    wit = _Witnesses(cfg.witness_limit)
    summary = {}
    count = 0
    for conv in CONVENTIONS:
        graphs = 0
        for g, rep in _nedb_instances(cfg, conv):
            graphs += 1
            t, gamma = rep.gt_nedb
            if rep.diameter - 1 > t * gamma:
                wit.add(g, convention=conv, diameter=rep.diameter, t=t, gamma_prime=gamma)
        count += graphs
        summary[conv.value] = {"instances": graphs}
    return _result(
        "C9",
        "a t-nicely edge balanced graph of diameter d has d - 1 <= t gamma'",
        f"nicely edge balanced atlas graphs on <= {cfg.atlas_n_max} vertices, both conventions",
        count, wit, CONVENTIONS, COUNTEREXAMPLE, {"per_convention": summary},
    )


def check_c10(cfg: VerifyConfig) -> CheckResult:
    wit = _Witnesses(cfg.witness_limit)
    summary = {}
    count = 0
    for conv in CONVENTIONS:
        tally = {"cases": 0, "forward_failures": 0, "converse_failures": 0,
                 "without_vertex_condition_converse_failures": 0,
                 "without_vertex_condition_forward_failures": 0}
        for an in cfg.product_corpus:
            for bn in cfg.product_corpus:
                a, b, p = _named(an), _named(bn), _cart(an, bn)
                pn = gt_nedb(p, conv)
                na, nb_ = gt_nedb(a, conv), gt_nedb(b, conv)
                va, vb = gt_ndb(a), gt_ndb(b)
                for t in cfg.product_t:
                    tally["cases"] += 1
                    lhs = pn is not None and (pn[0] == t or pn[1] == 0)
                    edge_ok = all(x is not None and (x[0] == t or x[1] == 0) for x in (na, nb_))
                    vert_ok = all(x is not None and x[0] == t for x in (va, vb))
                    eq = None
                    if edge_ok and vert_ok:
                        left = b.n * na[1] + b.m * va[1]
                        right = a.n * nb_[1] + a.m * vb[1]
                        eq = left == right
                    rhs = bool(edge_ok and vert_ok and eq)
                    case = dict(factors=(an, bn), t=t, convention=conv, product_nedb=pn,
                                nedb=(na, nb_), ndb=(va, vb), gamma_equation=eq)
                    if rhs and not lhs:
                        tally["forward_failures"] += 1
                        wit.add(p, direction="factors => product", **case)
                    if lhs and not rhs:
                        tally["converse_failures"] += 1
                        wit.add(p, direction="product => factors", **case)
                    if edge_ok and not lhs:
                        tally["without_vertex_condition_forward_failures"] += 1
                    if lhs and not edge_ok:
                        tally["without_vertex_condition_converse_failures"] += 1
        count += tally["cases"]
        summary[conv.value] = tally
    return _result(
        "C10",
        "A x B (cartesian) is t-nicely edge balanced iff A and B are t-nicely edge and vertex "
        "balanced and |V(B)| gamma'_A + |E(B)| gamma_A = |V(A)| gamma'_B + |E(A)| gamma_B",
        f"ordered pairs from {list(cfg.product_corpus)}, t in {list(cfg.product_t)}, both conventions",
        count, wit, CONVENTIONS, COUNTEREXAMPLE, {"per_convention": summary},
    )


def check_c11(cfg: VerifyConfig) -> CheckResult:
    wit = _Witnesses(cfg.witness_limit)
    count = 0
    values = {}
    for n in cfg.kn_tn_n:
        for t in cfg.kn_tn_t:
            g = complete_bipartite(n, t * n)
            count += 1
            vals = gt_sedb_values(g)
            values[f"n={n},t={t}"] = vals
            if t not in vals:
                wit.add(g, n=n, t=t, gt_sedb_values=vals)
    return _result(
        "C11",
        "K(n,tn) is strongly t-edge balanced",
        f"K(n,tn) for n in {list(cfg.kn_tn_n)}, t in {list(cfg.kn_tn_t)}",
        count, wit, (), COUNTEREXAMPLE, {"gt_sedb_values": values},
    )


def check_c12(cfg: VerifyConfig) -> CheckResult:
    wit = _Witnesses(cfg.witness_limit)
    diam2 = sedb_graphs = 0
    restricted_t1 = []
    for g, rep in iter_atlas(cfg.atlas_n_max, AUGMENTED):
        strict_edb = 1 in _edb(g, STRICT)
        if rep.sedb:
            sedb_graphs += 1
            if not strict_edb:
                wit.add(g, part="SEDB => EDB", convention=STRICT)
        if 1 in rep.gt_sedb_values and not strict_edb:
            restricted_t1.append(to_graph6(g))
        if rep.diameter != 2:
            continue
        diam2 += 1
        vals = rep.gt_sedb_values
        for t in ([] if vals is ALL_T else sorted(vals)):
            if t >= 2 and t not in rep.gt_edb_values:
                wit.add(g, part="diameter-2 strong t => t-edge balanced", t=t,
                        convention=AUGMENTED, gt_edb_values=rep.gt_edb_values)
    details = {
        "diameter_two_graphs": diam2,
        "sedb_graphs": sedb_graphs,
        "levels_1_to_d_minus_1_t1_not_edb": restricted_t1,
    }
    return _result(
        "C12",
        "a diameter-2 strongly t-edge balanced graph is t-edge balanced; "
        "strongly edge balanced implies edge balanced",
        f"atlas graphs on <= {cfg.atlas_n_max} vertices",
        diam2 + sedb_graphs, wit, CONVENTIONS, COUNTEREXAMPLE, details,
    )


CHECKS: dict[str, Callable[[VerifyConfig], CheckResult]] = {
    "C1": check_c1, "C2": check_c2, "C3": check_c3, "C4": check_c4,
    "C5": check_c5, "C6": check_c6, "C7": check_c7, "C8": check_c8,
    "C9": check_c9, "C10": check_c10, "C11": check_c11, "C12": check_c12,
}


def run_check(check_id: str, config: Optional[VerifyConfig] = None, **overrides) -> CheckResult:
    cfg = replace(config or VerifyConfig(), **overrides)
    cfg.validate()
    try:
        fn = CHECKS[check_id.upper()]
    except KeyError:
        raise ValueError(f"unknown check {check_id!r}; choose from {list(CHECKS)}") from None
    return fn(cfg)


@dataclass
class VerificationReport:
    config: VerifyConfig
    results: list[CheckResult]

    def summary(self) -> dict:
        tally = {PASS: 0, COUNTEREXAMPLE: 0, DISCREPANCY: 0}
        for r in self.results:
            tally[r.verdict] += 1
        return {"checks": len(self.results), **tally}

    def to_dict(self) -> dict:
        return {
            "tool_version": __version__,
            "config": self.config.to_dict(),
            "results": [r.to_dict() for r in self.results],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        rows = [("id", "verdict", "instances", "witnesses", "claim")]
        for r in self.results:
            rows.append((r.check_id, r.verdict, str(r.instance_count), str(r.witness_total), r.claim))
        widths = [max(len(row[k]) for row in rows) for k in range(4)]
        lines = []
        for row in rows:
            cells = [row[k].ljust(widths[k]) for k in range(4)] + [row[4]]
            lines.append("  ".join(cells))
        s = self.summary()
        lines.append("")
        lines.append(f"{s['checks']} checks: {s[PASS]} pass, {s[COUNTEREXAMPLE]} counterexample, "
                     f"{s[DISCREPANCY]} discrepancy")
        return "\n".join(lines) + "\n"


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("EDGEBALANCE_THREADS", "1")))
    except ValueError:
        return 1


def run_all(config: Optional[VerifyConfig] = None, checks: Optional[list[str]] = None) -> VerificationReport:
    """Run the requested checks (default: all twelve) and collect their results in id order."""
    cfg = config or VerifyConfig()
    cfg.validate()
    ids = [c.upper() for c in (checks or CHECK_IDS)]
    for c in ids:
        if c not in CHECKS:
            raise ValueError(f"unknown check {c!r}; choose from {list(CHECKS)}")
    ids = sorted(set(ids), key=lambda c: int(c[1:]))
    threads = _thread_count()
    if threads > 1:
        # warm the shared atlas cache once so workers do not race to build it
        for conv in CONVENTIONS:
            for _ in iter_atlas(cfg.atlas_n_max, conv):
                pass
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: CHECKS[c](cfg), ids))
    else:
        results = [CHECKS[c](cfg) for c in ids]
    return VerificationReport(cfg, results)
