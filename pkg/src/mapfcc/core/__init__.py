"""
Problem model: graphs, instances, placements, schedules and the feasibility
validator.
"""
from .graph import (
    Graph,
    UNREACHABLE,
    ball,
    bfs_distances,
    power_graph,
    tree_path,
)
from .unionfind import UnionFind
from .connectivity import is_connected_in, is_d_connected
from .instance import Configuration, Instance, Schedule
from .validation import ValidationReport, Violation, ViolationKind, validate_schedule
