import logging
from typing import Optional

from .decomposition import treewidth_upper_bound
from .disjoint_paths import solve_disjoint_paths
from .time_expanded import build_time_expanded
from .witness import paths_to_schedule
from ..core import Instance, Schedule
from ..search import Outcome, SearchResult

log = logging.getLogger("mapfcc.expanded")


def width_bound(ell: int, width: int) -> int:
    """
    Width of the lifted decomposition of a yes-instance's time-expanded graph.
    """
    return 3 * (ell + 1) * (width + 1) - 1


def solve_expanded(
    inst: Instance, budget: Optional[int] = None, gate: bool = False
) -> SearchResult:
    """
    Decide the instance through disjoint paths in its time-expanded graph.

    Args:
        inst:
            Problem instance.
        budget:
            Node budget of the path search.
        gate:
            If True, compare a heuristic width of the time-expanded graph with
            the width a yes-instance would admit. The result is only logged: a
            heuristic width may overestimate and never rejects by itself.
    """
    if inst.starts == inst.targets:
        return SearchResult(Outcome.FEASIBLE, Schedule.from_positions([inst.starts]))

    width, _ = treewidth_upper_bound(inst.graph)
    gi = build_time_expanded(inst)
    if gate:
        expanded_width, _ = treewidth_upper_bound(gi.as_graph())
        bound = width_bound(inst.ell, width)
        if expanded_width > bound:
            log.info("gate: width %s exceeds %s; deciding by search", expanded_width, bound)
        else:
            log.info("gate: width %s within %s", expanded_width, bound)

    result = solve_disjoint_paths(inst, budget=budget, gi=gi)
    if not result.is_feasible:
        return SearchResult(result.outcome, None, result.stats)
    schedule = paths_to_schedule(gi, result.witness)
    trimmed = Schedule(schedule.steps[: result.makespan + 1])
    return SearchResult(Outcome.FEASIBLE, trimmed, result.stats)
