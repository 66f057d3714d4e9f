"""Edge distance-balance invariants of small graphs.

Counts of vertices and edges closer to one end of an edge than the other,
the (generalized) distance-balanced classes built on them, Szeged-type
indices, graph products, exhaustive small-graph enumeration, and an audit
harness that checks published claims about these classes by brute force.
"""

__version__ = "0.1.0"

from .atlas import (
    CatalogEntry,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    enumerate_connected,
    parse_predicate,
    search,
)
from .classify import (
    ALL_T,
    ClassificationReport,
    full_report,
    gt_db_values,
    gt_edb_values,
    gt_ndb,
    gt_nedb,
    gt_sedb_values,
    is_gt_db,
    is_gt_edb,
    is_gt_nedb,
    is_gt_sedb,
    is_sedb,
)
from .distance import (
    UNREACHABLE,
    all_pairs_distances,
    diameter,
    edge_edge_distance,
    vertex_edge_distance,
)
from .errors import *  # noqa: F401,F403
from .generators import complete, complete_bipartite, cycle, empty, generate, hypercube, path, star
from .graph import Graph, from_edge_list, is_bipartite, is_connected
from .invariants import (
    AUGMENTED,
    STRICT,
    Convention,
    EdgeBalanceCounts,
    EdgePartition,
    claimed_edge_szeged,
    distance_partition,
    edge_balance,
    edge_balance_table,
    edge_counts,
    edge_szeged_index,
    szeged_index,
    vertex_counts,
)
from .io import parse_edgelist, parse_graph6, to_edgelist, to_graph6
from .products import cartesian_product, lexicographic_product
