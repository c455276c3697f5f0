import logging
from dataclasses import dataclass, field
from typing import Optional

from .time_expanded import TimeExpandedGraph, build_time_expanded
from .properties import check_properties
from .witness import PathsWitness, check_witness
from ..core import Instance, is_connected_in
from ..search import MoveGenerator, Outcome, SearchStats

log = logging.getLogger("mapfcc.expanded")


@dataclass(frozen=True)
class PathsResult:
    """
    Answer of :func:`solve_disjoint_paths`.

    Attributes:
        outcome:
            Feasible, infeasible or budget.
        witness:
            Disjoint paths over all ell + 1 layers, when feasible.
        makespan:
            Smallest number of turns after which all paths sit on their
            targets.
    """

    outcome: Outcome
    witness: Optional[PathsWitness] = None
    makespan: Optional[int] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def is_feasible(self) -> bool:
        return self.outcome is Outcome.FEASIBLE


class _BudgetExhausted(Exception):
    pass


class DisjointPathsSearch:
    """
    Extends all paths one layer at a time.

    The copy and cross edges between two consecutive layers are exactly the
    moves of one turn, so layer extensions come from :class:`MoveGenerator`:
    they keep the paths disjoint, never traverse two cross edges that form a
    swap and keep every layer d-connected. Placements shown not to reach the
    targets within r turns are remembered and skipped for any r' <= r.
    """

    def __init__(self, gi: TimeExpandedGraph, budget: Optional[int] = None):
        self.gi = gi
        self.inst = gi.instance
        self.budget = budget
        self.stats = SearchStats(generated_nodes=1, max_frontier=1)
        self.generator = MoveGenerator(self.inst)
        self.dead = {}

    def run(self) -> PathsResult:
        inst = self.inst
        start, goal = inst.starts, inst.targets
        ell = inst.ell
        if start == goal:
            witness = PathsWitness(tuple((s,) * (ell + 1) for s in start))
            return PathsResult(Outcome.FEASIBLE, witness, 0, self.stats)
        if not is_connected_in(self.generator.communication_graph, start):
            log.warning("paths: layer 0 is not %s-connected", inst.d)
            return PathsResult(Outcome.INFEASIBLE, None, None, self.stats)

        try:
            for turns in range(1, ell + 1):
                routes = [start]
                if self._extend(routes, turns):
                    padded = routes + [goal] * (ell - turns)
                    witness = self._certify(PathsWitness(tuple(zip(*padded))))
                    log.info("paths: feasible with makespan %s", turns)
                    return PathsResult(Outcome.FEASIBLE, witness, turns, self.stats)
        except _BudgetExhausted:
            log.warning("paths: node budget of %s exhausted", self.budget)
            return PathsResult(Outcome.BUDGET, None, None, self.stats)
        return PathsResult(Outcome.INFEASIBLE, None, None, self.stats)

    def _extend(self, routes, turns) -> bool:
        positions = routes[-1]
        remaining = turns - (len(routes) - 1)
        if remaining == 0:
            return positions == self.inst.targets
        if self.dead.get(positions, -1) >= remaining:
            return False
        if self.budget is not None and self.stats.expanded_nodes >= self.budget:
            raise _BudgetExhausted
        self.stats.expanded_nodes += 1
        self.stats.max_frontier = max(self.stats.max_frontier, len(routes))

        for layer_move in self.generator.moves(positions, horizon=remaining - 1):
            self.stats.generated_nodes += 1
            routes.append(layer_move)
            if self._extend(routes, turns):
                return True
            routes.pop()
        self.dead[positions] = max(self.dead.get(positions, -1), remaining)
        return False

    def _certify(self, witness: PathsWitness) -> PathsWitness:
        gi = self.gi
        check_witness(gi, witness)
        S, X = witness.edge_set(gi), witness.layer_sets(gi)
        failing = check_properties(gi, S, X, self.inst.d).failing()
        assert not failing, f"witness breaks properties {failing}"
        return witness


def solve_disjoint_paths(
    inst: Instance, budget: Optional[int] = None, gi: Optional[TimeExpandedGraph] = None
) -> PathsResult:
    """
    Search disjoint paths in the time-expanded graph that satisfy all eight
    properties, trying makespans 1, 2, ... up to ell.

    A witness of minimum makespan is returned, padded on the targets up to ell
    layers.
    """
    if gi is None:
        gi = build_time_expanded(inst)
    return DisjointPathsSearch(gi, budget).run()
