"""
Time-expanded graph: disjoint-paths characterization, logical encoding and
tree decompositions.
"""
from .time_expanded import EdgeLabel, LabeledEdge, TimeExpandedGraph, build_time_expanded
from .witness import PathsWitness, check_witness, paths_to_schedule, schedule_to_paths
from .properties import Properties, check_properties
from .formula import (
    FORMULA_NAMES,
    connected_k,
    deg_0,
    deg_1,
    deg_2,
    dist_k,
    dist_k_unrolled,
    evaluate_formula,
    mso_definitions,
    mso_sentence,
)
from .mso import emit_mso_structure
from .decomposition import (
    TreeDecomposition,
    check_decomposition,
    is_valid_decomposition,
    lift_tree_decomposition,
    treewidth_upper_bound,
)
from .disjoint_paths import PathsResult, solve_disjoint_paths
from .local import extract_ball, local_radius, solve_local
from .pipeline import solve_expanded, width_bound
