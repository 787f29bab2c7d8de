"""Total-eccentricity index toolkit.

A small library and CLI for eccentricity-based topological indices on
undirected graphs: exact index computation, constructors for the named
extremal families, tree rewrites with monotone traces, exhaustive
enumeration of non-isomorphic graphs at small orders, and a brute-force
verification battery for the published extremal claims.
"""

from .canonical import canonical_key, tree_key
from .edgelist import format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from .enumeration import (
    ExtremalReport,
    extremal_scan,
    gen_bicyclic,
    gen_conjugated_trees,
    gen_trees,
    gen_unicyclic,
)
from .families import FAMILY_IDS, construct, family_identities
from .graphs import (
    DisconnectedGraphError,
    EccProfile,
    Graph,
    GraphError,
    GraphPath,
    add_edge,
    bfs_distances,
    build_graph,
    classify,
    delete_vertex,
    diametrical_path,
    eccentric_set,
    eccentricities,
    eccentricity_profile,
    is_connected,
    is_tree,
    relabel,
    remove_edge,
    simple_cycles,
)
from .indices import (
    ClosedForm,
    IndexReport,
    average_eccentricity,
    closed_form,
    eccentric_connectivity,
    index_report,
    tau_path,
    total_eccentricity,
)
from .matching import Matching, is_conjugated, tree_perfect_matching
from .rewrite import (
    RewriteStep,
    RewriteTrace,
    format_trace,
    matched_pair_candidates,
    pendant_move_candidates,
    radial_candidates,
    rewrite_to_matched_star,
    rewrite_to_path,
    rewrite_to_star,
)
from .verification import Bounds, CheckResult, run_checks

__version__ = "0.1.0"
