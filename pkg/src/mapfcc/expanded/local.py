import logging
from typing import Optional, Tuple

from ..core import Graph, Instance, Schedule, ball, validate_schedule
from ..exceptions import InvalidInstance, InvalidSchedule
from ..search import Outcome, SearchResult, SearchStats, solve_bfs

log = logging.getLogger("mapfcc.expanded")


def extract_ball(g: Graph, center: int, radius: int) -> Tuple[Graph, Tuple[int, ...]]:
    """
    Subgraph induced by the vertices at distance at most ``radius`` from
    ``center``.

    Returns:
        The pair (subgraph, origin) as in :meth:`Graph.induced_subgraph`.
    """
    if radius < 0:
        raise InvalidInstance("radius must be non-negative")
    return g.induced_subgraph(ball(g, center, radius))


def local_radius(inst: Instance) -> int:
    """
    No agent can leave the ball of this radius around the first agent's
    start within ell turns while staying d-connected.
    """
    return inst.k * inst.d + inst.ell


def solve_local(inst: Instance, budget: Optional[int] = None, method: str = "bfs") -> SearchResult:
    """
    Solve the instance on the ball of radius kd + ell around the first
    agent's start.

    Args:
        inst:
            Problem instance.
        budget:
            Node budget passed to the delegate solver.
        method:
            Either "bfs" or "expanded".
    """
    if inst.starts == inst.targets:
        return solve_bfs(inst, budget=budget)

    sub, origin = extract_ball(inst.graph, inst.starts[0], local_radius(inst))
    new_ids = {old: new for new, old in enumerate(origin)}
    outside = [v for s, t in inst.agents for v in (s, t) if v not in new_ids]
    if outside:
        log.info("local: vertices %s are out of reach", outside)
        return SearchResult(Outcome.INFEASIBLE, None, SearchStats())

    local = inst.translate(sub, new_ids)
    log.info("local: ball has %s of %s vertices", sub.n, inst.graph.n)
    if method == "bfs":
        result = solve_bfs(local, budget=budget)
    elif method == "expanded":
        from .pipeline import solve_expanded

        result = solve_expanded(local, budget=budget)
    else:
        raise ValueError(f"invalid method: {method}")

    if result.schedule is None:
        return result
    schedule: Schedule = result.schedule.relabel(origin)
    report = validate_schedule(inst, schedule)
    if not report.ok or not report.within_budget:
        raise InvalidSchedule(f"lifted schedule is invalid: {report.violations}")
    return SearchResult(result.outcome, schedule, result.stats)
