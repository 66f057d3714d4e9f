"""
Auditing published claims
=========================

Each check states a claim, the instances it ran over and a verdict.
Witnesses carry graph6 strings so they can be fed back to the CLI.
"""

from edgebalance.verify import VerifyConfig, run_all, run_check

print(run_all(VerifyConfig(atlas_n_max=6)).to_text())

###############################################################################
# The closed form for the edge-Szeged index of K(n, tn) is not even an integer

r = run_check("C4")
for key, row in r.details["values"].items():
    print(key, row)

###############################################################################
# Look at the first witness of a failing check

w = run_check("C6").witnesses[0]
print(w)
