"""
Brute-force reference solver.

Shares no move generation code with :mod:`mapfcc.search.bfs`: joint moves are
enumerated with :func:`itertools.product` and every condition is checked
literally on each candidate.
"""
import itertools
import logging
from typing import Optional

from .result import Outcome, SearchResult, SearchStats
from ..core import Instance, Schedule, bfs_distances, is_d_connected

log = logging.getLogger("mapfcc.search")


class _BudgetExhausted(Exception):
    pass


def oracle_solve(inst: Instance, budget: Optional[int] = None) -> SearchResult:
    """
    Iterative-deepening DFS over joint moves.

    The only pruning is the current-path cycle check and the per-agent
    distance bound (an agent cannot be farther from its target than the
    number of remaining turns). Depths are tried in increasing order, so the
    returned schedule has minimum makespan.

    Args:
        inst:
            Problem instance.
        budget:
            Maximum number of visited search nodes over all iterations.
    """
    g = inst.graph
    k = inst.k
    stats = SearchStats(generated_nodes=1, max_frontier=1)
    start = inst.starts
    goal = inst.targets

    if start == goal:
        return SearchResult(Outcome.FEASIBLE, Schedule.from_positions([start]), stats)
    if not is_d_connected(g, inst.d, start):
        return SearchResult(Outcome.INFEASIBLE, None, stats)

    dist = [bfs_distances(g, t) for t in goal]

    def legal(prev, curr, remaining):
        if any(dist[a][curr[a]] > remaining for a in range(k)):
            return False
        if len(set(curr)) != k:
            return False
        for a, b in itertools.combinations(range(k), 2):
            if curr[a] == prev[b] and curr[b] == prev[a] and prev[a] != prev[b]:
                return False
        return is_d_connected(g, inst.d, curr)

    def search(path, depth):
        if budget is not None and stats.expanded_nodes >= budget:
            raise _BudgetExhausted
        stats.expanded_nodes += 1
        stats.max_frontier = max(stats.max_frontier, len(path))
        current = path[-1]
        if len(path) - 1 == depth:
            return list(path) if current == goal else None

        remaining = depth - len(path)
        options = [g.closed_neighborhood(v) for v in current]
        for move in itertools.product(*options):
            if move in path or not legal(current, move, remaining):
                continue
            stats.generated_nodes += 1
            path.append(move)
            found = search(path, depth)
            path.pop()
            if found is not None:
                return found
        return None

    try:
        for depth in range(1, inst.ell + 1):
            found = search([start], depth)
            if found is not None:
                log.info("oracle: feasible with makespan %s", depth)
                return SearchResult(Outcome.FEASIBLE, Schedule.from_positions(found), stats)
    except _BudgetExhausted:
        log.warning("oracle: node budget of %s exhausted", budget)
        return SearchResult(Outcome.BUDGET, None, stats)
    return SearchResult(Outcome.INFEASIBLE, None, stats)
