import logging
from typing import Optional

from .connected_sets import count_connected_sets
from .keys import config_key, decode_key
from .result import Outcome, SearchResult, SearchStats
from .successors import MoveGenerator
from ..core import Instance, Schedule, is_d_connected

log = logging.getLogger("mapfcc.search")


def solve_bfs(
    inst: Instance, budget: Optional[int] = None, count_sets: bool = False
) -> SearchResult:
    """
    Breadth-first search over the configuration network.

    Returns a feasible schedule of minimum makespan when that minimum does
    not exceed ``inst.ell``.

    Args:
        inst:
            Problem instance.
        budget:
            Maximum number of expanded configurations. The search reports
            :attr:`Outcome.BUDGET` when it would expand more than that.
        count_sets:
            If True, fill ``stats.connected_set_estimate`` with the number of
            connected vertex sets of size ``min(kd, n)`` that contain the first
            agent's start.
    """
    stats = SearchStats(generated_nodes=1, max_frontier=1)
    if count_sets:
        size = min(inst.k * inst.d, inst.graph.n)
        stats.connected_set_estimate = count_connected_sets(
            inst.graph, inst.starts[0], size
        )

    start = inst.starts
    goal = inst.targets
    if start == goal:
        log.info("bfs: start placement already matches the targets")
        return SearchResult(Outcome.FEASIBLE, Schedule.from_positions([start]), stats)
    if not is_d_connected(inst.graph, inst.d, start):
        log.warning("bfs: initial placement is not %s-connected", inst.d)
        return SearchResult(Outcome.INFEASIBLE, None, stats)

    generator = MoveGenerator(inst)
    if not generator.can_finish(start, inst.ell):
        log.info("bfs: some agent is farther than %s from its target", inst.ell)
        return SearchResult(Outcome.INFEASIBLE, None, stats)

    goal_key = config_key(goal)
    parents = {config_key(start): None}
    frontier = [start]

    for depth in range(1, inst.ell + 1):
        remaining = inst.ell - depth
        next_frontier = []
        for positions in frontier:
            if budget is not None and stats.expanded_nodes >= budget:
                log.warning("bfs: node budget of %s exhausted", budget)
                return SearchResult(Outcome.BUDGET, None, stats)
            stats.expanded_nodes += 1
            parent_key = config_key(positions)

            for move in generator.moves(positions, remaining):
                stats.generated_nodes += 1
                key = config_key(move)
                if key in parents:
                    continue
                parents[key] = parent_key
                if key == goal_key:
                    schedule = _reconstruct(parents, key)
                    log.info("bfs: feasible with makespan %s", schedule.makespan)
                    return SearchResult(Outcome.FEASIBLE, schedule, stats)
                next_frontier.append(move)

        frontier = next_frontier
        stats.max_frontier = max(stats.max_frontier, len(frontier))
        if not frontier:
            break

    log.info("bfs: infeasible within makespan %s", inst.ell)
    return SearchResult(Outcome.INFEASIBLE, None, stats)


def _reconstruct(parents, key) -> Schedule:
    rows = []
    while key is not None:
        rows.append(decode_key(key))
        key = parents[key]
    return Schedule.from_positions(reversed(rows))
