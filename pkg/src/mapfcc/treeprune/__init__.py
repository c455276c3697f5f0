"""
Degree reduction for tree instances.
"""
from .pruning import (
    PruneStep,
    PruneTrace,
    hub_component,
    project_schedule,
    prune,
    prune_once,
    relevant_neighbors,
    require_tree,
)
from .solve import solve_tree
