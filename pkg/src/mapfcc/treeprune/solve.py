import logging
from typing import Optional

from .pruning import prune, require_tree
from ..core import Instance, validate_schedule
from ..exceptions import InvalidSchedule
from ..search import SearchResult, solve_bfs

log = logging.getLogger("mapfcc.treeprune")


def solve_tree(inst: Instance, budget: Optional[int] = None) -> SearchResult:
    """
    Solve an instance on a tree by pruning it to maximum degree 3k and running
    the BFS solver on the pruned tree.

    The BFS solver returns a minimum makespan schedule, which is what pruning
    requires for d = 1. The schedule is mapped back to original ids and
    re-validated against the original tree.

    Raises:
        NotATree:
            If the instance graph is not a tree.
    """
    require_tree(inst.graph, "; use solve_bfs for general graphs")
    pruned, trace = prune(inst.graph, inst)
    log.info(
        "tree: pruned %s of %s vertices in %s steps",
        len(trace.removed),
        inst.graph.n,
        len(trace.steps),
    )
    result = solve_bfs(trace.translate(pruned, inst), budget=budget)
    if result.schedule is None:
        return result

    schedule = result.schedule.relabel(trace.origin)
    report = validate_schedule(inst, schedule)
    if not report.ok or not report.within_budget:
        raise InvalidSchedule(f"lifted schedule is invalid: {report.violations}")
    return SearchResult(result.outcome, schedule, result.stats)
