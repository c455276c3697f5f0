import logging
from typing import Optional

from ..core import Instance, ball, validate_schedule
from ..exceptions import InvalidSchedule
from ..expanded import local_radius, solve_expanded, solve_local
from ..search import SearchResult, oracle_solve, solve_bfs
from ..treeprune import solve_tree

log = logging.getLogger("mapfcc.cli")

SOLVERS = {
    "bfs": solve_bfs,
    "tree": solve_tree,
    "expanded": solve_expanded,
    "local": solve_local,
    "oracle": oracle_solve,
}


def choose_strategy(inst: Instance) -> str:
    """
    Cheapest applicable solver: pruning on trees, ball extraction when
    agents cannot reach the whole graph, BFS otherwise.
    """
    graph = inst.graph
    if graph.is_tree():
        return "tree"
    if len(ball(graph, inst.starts[0], local_radius(inst))) < graph.n:
        return "local"
    return "bfs"


def solve(inst: Instance, strategy: str, budget: Optional[int] = None) -> SearchResult:
    """
    Run a solver by name and check the schedule it returns.

    Raises:
        InvalidSchedule:
            If the solver produced a schedule that fails validation.
    """
    if strategy == "auto":
        strategy = choose_strategy(inst)
    result = SOLVERS[strategy](inst, budget=budget)
    if result.schedule is not None:
        report = validate_schedule(inst, result.schedule)
        if not report.ok or not report.within_budget:
            raise InvalidSchedule(f"{strategy} returned an invalid schedule: {report.violations}")
    log.info("%s: %s", strategy, result.outcome.value)
    return result
