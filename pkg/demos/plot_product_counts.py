"""
Edge counts in Cartesian products
=================================

The closer-edge count of a product edge splits into a copy of the factor
count, scaled by the other factor's order, plus the other factor's edges.
"""

from edgebalance import STRICT, cartesian_product, cycle, edge_balance_table, path

a, b = path(3), cycle(4)
p = cartesian_product(a, b)
print("P3 x C4:", p.n, "vertices,", p.m, "edges")

###############################################################################
# An edge that moves along the first factor, from (0, 0) to (1, 0)

f = (0 * b.n + 0, 1 * b.n + 0)
row = next(c for c in edge_balance_table(p, STRICT) if {c.alpha, c.beta} == set(f))
base = next(c for c in edge_balance_table(a, STRICT) if c.edge == (0, 1))
print("product counts:", row.edge_pair)
print("from the factor:", (b.n * base.m_alpha + base.n_alpha * b.m,
                           b.n * base.m_beta + base.n_beta * b.m))
