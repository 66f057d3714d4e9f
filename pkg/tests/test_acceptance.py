"""Acceptance criteria, one test each. Every test prints a single
``criterion N: PASS|FAIL`` line (visible even without ``-s``)."""

import subprocess
import sys
from itertools import product

import networkx as nx
import pytest

from edgebalance import (
    AUGMENTED,
    STRICT,
    complete_bipartite,
    distance_partition,
    edge_balance_table,
    enumerate_connected,
    is_gt_edb,
)
from edgebalance.verify import DISCREPANCY, PASS, run_check
from oracles import brute_counts, naive_connected_count


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, detail
    return emit


def naive_bipartite_diameter_two(n_max):
    """Classes of connected bipartite diameter-2 graphs, found by trying every
    edge subset between colour classes {0..p-1} and {p..n-1}."""
    reps = []
    for n in range(2, n_max + 1):
        for p in range(1, n // 2 + 1):
            cross = [(u, v) for u in range(p) for v in range(p, n)]
            for bits in product((0, 1), repeat=len(cross)):
                h = nx.Graph()
                h.add_nodes_from(range(n))
                h.add_edges_from(e for e, b in zip(cross, bits) if b)
                if not nx.is_connected(h) or nx.diameter(h) != 2:
                    continue
                if not any(nx.is_isomorphic(h, r) for r in reps):
                    reps.append(h)
    return len(reps)


def test_criterion_1_accounting_identity(report):
    graphs = edges = 0
    ok = True
    for n in range(1, 7):
        for g in enumerate_connected(n):
            graphs += 1
            for c in edge_balance_table(g, STRICT):
                edges += 1
                ok &= c.m_alpha + c.m_beta + c.m_zero == g.m - 1
                sizes = distance_partition(g, c.edge).sizes()
                ok &= sum(v for (i, j), v in sizes.items() if i < j) == c.m_alpha
                ok &= sum(v for (i, j), v in sizes.items() if i > j) == c.m_beta
                ok &= sum(v for (i, j), v in sizes.items() if i == j) == c.m_zero
                ok &= brute_counts(g, c.alpha, c.beta)[3:] == (c.m_alpha, c.m_beta, c.m_zero)
    report(1, ok and graphs == 143, f"{graphs} graphs, {edges} edges, exact")


def test_criterion_2_complete_bipartite_counts(report):
    ok = True
    for n in range(1, 5):
        for t in range(1, 5):
            g = complete_bipartite(n, t * n)
            ok &= all((c.m_alpha, c.m_beta) == (t * n, n) for c in edge_balance_table(g, AUGMENTED))
            ok &= is_gt_edb(g, t, AUGMENTED)
    report(2, ok, "K(n,tn), n,t in 1..4, exact")


def test_criterion_3_product_formulas(report):
    r = run_check("C5")
    report(3, r.verdict == PASS and r.instance_count >= 36,
           f"{r.instance_count} products, {r.details['product_edges_checked']} edges, verdict {r.verdict}")


def test_criterion_4_edge_szeged_discrepancy(report):
    r = run_check("C4")
    row = r.details["values"]["n=2,t=2"]
    ok = (row["strict"], row["augmented"], row["formula"]) == (24, 64, "784/9") and r.verdict == DISCREPANCY
    report(4, ok, f"strict {row['strict']}, augmented {row['augmented']}, formula {row['formula']}, "
                  f"verdict {r.verdict}")


def test_criterion_5_bipartite_diameter_two(report):
    r = run_check("C3")
    naive = naive_bipartite_diameter_two(7)
    ok = r.verdict == PASS and r.instance_count == naive
    report(5, ok, f"scanned {r.instance_count}, naive oracle {naive}, verdict {r.verdict}")


def test_criterion_6_strong_implies_balanced(report):
    r = run_check("C12")
    sedb_failures = [w for w in r.witnesses if w.get("part") == "SEDB => EDB"]
    ok = r.verdict == PASS and r.witness_total == 0 and not sedb_failures
    report(6, ok, f"{r.instance_count} instances over n <= 7, {r.witness_total} counterexamples")


def test_criterion_7_enumeration_counts(report):
    expected = {3: 2, 4: 6, 5: 21, 6: 112}
    mine = {n: sum(1 for _ in enumerate_connected(n)) for n in expected}
    naive = {n: naive_connected_count(n) for n in expected}
    report(7, mine == naive == expected, f"library {mine}, naive {naive}")


def test_criterion_8_deterministic_verify(report, tmp_path):
    outs = []
    for k in range(2):
        target = tmp_path / f"run{k}.json"
        subprocess.run([sys.executable, "-m", "edgebalance", "verify", "--out", str(target)],
                       check=True, capture_output=True)
        outs.append(target.read_bytes())
    report(8, outs[0] == outs[1] and len(outs[0]) > 0, f"{len(outs[0])} bytes, byte-identical")

