"""
Helpers for tests and benchmarks.
"""
from .generators import (
    all_mcc,
    grid_instances,
    lanes_graph,
    lanes_instance,
    placements,
    random_connected_graph,
    random_instance,
    random_mcc,
    random_placement,
    random_tree,
    small_connected_graphs,
    tree_instances,
)
