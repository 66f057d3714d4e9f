"""
Edge balance of complete bipartite graphs
=========================================

In K(n, tn) every edge sees tn edges on one side and n on the other,
once the edge itself is counted on both sides.
"""

import numpy as np

from edgebalance import AUGMENTED, STRICT, complete_bipartite, edge_balance_table, gt_edb_values

# one edge of K(2, 4), under both counting conventions
g = complete_bipartite(2, 4)
for conv in (STRICT, AUGMENTED):
    c = edge_balance_table(g, conv)[0]
    print(conv.value, c.edge, "vertices", c.vertex_pair, "edges", c.edge_pair)

###############################################################################
# The ratio is the same on every edge, so the graph is t-balanced for t = 2

print("t values:", sorted(gt_edb_values(g)))

###############################################################################
# A small table over n and t

table = np.zeros((4, 4), dtype=int)
for n in range(1, 5):
    for t in range(1, 5):
        (only,) = gt_edb_values(complete_bipartite(n, t * n))
        table[n - 1, t - 1] = only
print(table)
