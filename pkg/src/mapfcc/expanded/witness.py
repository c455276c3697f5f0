from dataclasses import dataclass
from typing import FrozenSet, Tuple

from .time_expanded import EdgeLabel, LabeledEdge, TimeExpandedGraph
from ..core import Schedule, is_d_connected, validate_schedule
from ..exceptions import InvalidSchedule, InvalidWitness


@dataclass(frozen=True)
class PathsWitness:
    """
    One path per agent through the layers of the time-expanded graph.

    Attributes:
        routes:
            ``routes[a][i]`` is the movement graph vertex visited by agent
            ``a`` at layer ``i``.
    """

    routes: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "routes", tuple(tuple(r) for r in self.routes))

    @property
    def k(self) -> int:
        return len(self.routes)

    def vertex_path(self, gi: TimeExpandedGraph, agent: int) -> Tuple[int, ...]:
        return tuple(gi.vertex(v, i) for i, v in enumerate(self.routes[agent]))

    def edge_set(self, gi: TimeExpandedGraph) -> FrozenSet[LabeledEdge]:
        """
        The set S of copy and cross edges used by the paths.

        Raises:
            InvalidWitness:
                If two consecutive route vertices are not joined by an edge.
        """
        edges = set()
        for a in range(self.k):
            path = self.vertex_path(gi, a)
            for x, y in zip(path, path[1:]):
                label = EdgeLabel.COPY if gi.base_of(x) == gi.base_of(y) else EdgeLabel.CROSS
                if not gi.has_label(x, y, label):
                    raise InvalidWitness(1, f"agent {a} uses a missing edge {x}-{y}")
                edges.add(LabeledEdge.make(x, y, label))
        return frozenset(edges)

    def layer_sets(self, gi: TimeExpandedGraph) -> Tuple[FrozenSet[int], ...]:
        """
        The sets X_0, ..., X_ell of vertices visited at each layer.
        """
        return tuple(
            frozenset(gi.vertex(route[i], i) for route in self.routes if i < len(route))
            for i in range(gi.ell + 1)
        )


def schedule_to_paths(gi: TimeExpandedGraph, sched: Schedule) -> PathsWitness:
    """
    Convert a feasible schedule into disjoint paths of the time-expanded graph.

    Schedules shorter than ell are padded by keeping every agent on its target.

    Raises:
        InvalidSchedule:
            If the schedule is not feasible within the makespan budget.
    """
    inst = gi.instance
    report = validate_schedule(inst, sched)
    if not report.ok:
        raise InvalidSchedule(f"infeasible schedule: {report.violations[0]}")
    if not report.within_budget:
        raise InvalidSchedule(f"makespan {sched.makespan} exceeds {inst.ell}")
    padded = sched.padded(inst.ell)
    return PathsWitness(tuple(tuple(step[a] for step in padded) for a in range(inst.k)))


def check_witness(gi: TimeExpandedGraph, w: PathsWitness) -> None:
    """
    Check that the paths characterize a feasible schedule.

    Raises:
        InvalidWitness:
            Naming the first failing condition: 1 (one vertex per layer along
            existing edges), "disjoint", 2 (endpoints), 3 (no swaps) or 4
            (d-connected layers).
    """
    inst = gi.instance
    ell = gi.ell
    if w.k != inst.k:
        raise InvalidWitness(2, f"expected {inst.k} paths, got {w.k}")
    for a, route in enumerate(w.routes):
        if len(route) != ell + 1:
            raise InvalidWitness(1, f"path of agent {a} has {len(route)} layers")
        if any(not 0 <= v < gi.n_base for v in route):
            raise InvalidWitness(1, f"path of agent {a} leaves the graph")
    w.edge_set(gi)

    for i in range(ell + 1):
        layer = [route[i] for route in w.routes]
        if len(set(layer)) != len(layer):
            raise InvalidWitness("disjoint", f"paths meet at layer {i}")

    for a, (route, (s, t)) in enumerate(zip(w.routes, inst.agents)):
        if route[0] != s or route[-1] != t:
            raise InvalidWitness(2, f"path of agent {a} has wrong endpoints")

    for i in range(1, ell + 1):
        before = {route[i - 1]: a for a, route in enumerate(w.routes)}
        for a, route in enumerate(w.routes):
            u, v = route[i - 1], route[i]
            b = before.get(v)
            if u != v and b is not None and w.routes[b][i] == u:
                raise InvalidWitness(3, f"agents {a} and {b} swap at layer {i}")

    for i in range(ell + 1):
        if not is_d_connected(gi.base, inst.d, (route[i] for route in w.routes)):
            raise InvalidWitness(4, f"layer {i} is not {inst.d}-connected")


def paths_to_schedule(gi: TimeExpandedGraph, w: PathsWitness) -> Schedule:
    """
    Read a schedule of makespan ell from a valid witness.
    """
    check_witness(gi, w)
    return Schedule.from_positions(list(zip(*w.routes)))
