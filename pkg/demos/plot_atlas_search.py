"""
Searching the small-graph atlas
===============================

Every connected graph on up to six vertices, filtered by a predicate
on its balance report.
"""

from collections import Counter

from edgebalance import STRICT, parse_predicate, search

entries = search(parse_predicate("gt_edb=1"), 6)
print(len(entries), "edge-balanced graphs with at most 6 vertices")
print(Counter(e.n for e in entries))

###############################################################################
# Bipartite graphs of diameter two are exactly the complete bipartite ones

for e in search(parse_predicate("bipartite, diameter=2"), 6):
    print(e.graph6, e.n, e.m)

###############################################################################
# Graphs whose two counts are the same pair on every edge

for e in search(parse_predicate("gt_nedb"), 5, STRICT):
    print(e.graph6, e.report.gt_nedb)
