import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .mcc import MccInstance, pad_classes
from ..core import Graph, Instance, Schedule, bfs_distances
from ..exceptions import InvalidInstance, InvalidSchedule

log = logging.getLogger("mapfcc.reductions")

Edge = Tuple[int, int]


@dataclass
class GadgetLayout:
    """
    Vertex ids of every named vertex of the construction. All indices are
    1-based.

    Attributes:
        spine:
            ``spine[i, j]`` is a^i_j.
        path:
            ``path[i, p, j]`` is v^i_{p,j}.
        endpoint:
            ``endpoint[l, m, p, q]`` is the endpoint u^{l,m}_p of the gadget
            edge that stands for the edge v^l_p v^m_q of H. It lives in the
            gadget of the pair (min(l, m), max(l, m)).
        clique:
            ``clique[i, j]`` is t^i_j.
        agents:
            ``agents[i, j]`` is the index of the agent alpha^i_j.
    """

    k: int
    n: int
    classes: Tuple[Tuple[int, ...], ...] = ()
    spine: Dict[Tuple[int, int], int] = field(default_factory=dict)
    path: Dict[Tuple[int, int, int], int] = field(default_factory=dict)
    endpoint: Dict[Tuple[int, int, int, int], int] = field(default_factory=dict)
    gadget_edges: Dict[Tuple[int, int], List[Edge]] = field(default_factory=dict)
    clique: Dict[Tuple[int, int], int] = field(default_factory=dict)
    agents: Dict[Tuple[int, int], int] = field(default_factory=dict)
    size: int = 0

    @classmethod
    def allocate(cls, mcc: MccInstance) -> "GadgetLayout":
        """
        Assign ids: vertex gadgets in class order (spine, then paths), edge
        gadgets by pair (l, m), then the clique.
        """
        if mcc.k < 2:
            raise InvalidInstance("the construction needs at least two classes")
        if not mcc.is_padded:
            raise InvalidInstance("classes must have equal sizes; see pad_classes")
        if mcc.class_size < 1:
            raise InvalidInstance("classes must not be empty")
        k, n = mcc.k, mcc.class_size
        layout = cls(k, n, mcc.classes)
        ids = itertools.count()

        for i in range(1, k + 1):
            for j in layout.columns(i):
                layout.spine[i, j] = next(ids)
            for p in range(1, n + 1):
                for j in layout.columns(i):
                    layout.path[i, p, j] = next(ids)

        for l, m in layout.pairs():
            edges = []
            for p, q in mcc.cross_edges(l, m):
                top = layout.endpoint[l, m, p, q] = next(ids)
                bottom = layout.endpoint[m, l, q, p] = next(ids)
                edges.append((top, bottom))
            layout.gadget_edges[l, m] = edges

        for index, (i, j) in enumerate(layout.agent_keys()):
            layout.clique[i, j] = next(ids)
            layout.agents[i, j] = index
        layout.size = next(ids)
        return layout

    def columns(self, i: int) -> List[int]:
        return [j for j in range(1, self.k + 1) if j != i]

    def pairs(self) -> List[Tuple[int, int]]:
        return [(l, m) for l in range(1, self.k + 1) for m in range(l + 1, self.k + 1)]

    def agent_keys(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(1, self.k + 1) for j in self.columns(i)]

    def tops(self, i: int) -> List[int]:
        j = min(self.columns(i))
        return [self.path[i, p, j] for p in range(1, self.n + 1)]

    def bottoms(self, i: int) -> List[int]:
        j = max(self.columns(i))
        return [self.path[i, p, j] for p in range(1, self.n + 1)]

    def edge_tops(self, l: int, m: int) -> List[int]:
        return [top for top, _ in self.gadget_edges[l, m]]

    def edge_bottoms(self, l: int, m: int) -> List[int]:
        return [bottom for _, bottom in self.gadget_edges[l, m]]

    def edge_gadget_vertices(self) -> List[int]:
        return [x for edges in self.gadget_edges.values() for e in edges for x in e]


def build_vertex_gadget(i: int, mcc: MccInstance, layout: GadgetLayout) -> List[Edge]:
    """
    Edges of the gadget V_i: one path per vertex of the class, skipping
    column i, the spine path and a spoke between every spine vertex and the
    path vertices of its column.
    """
    if mcc.k < 2:
        raise InvalidInstance("vertex gadgets need at least two classes")
    columns = layout.columns(i)
    edges = []
    for p in range(1, layout.n + 1):
        for a, b in zip(columns, columns[1:]):
            edges.append((layout.path[i, p, a], layout.path[i, p, b]))
    for a, b in zip(columns, columns[1:]):
        edges.append((layout.spine[i, a], layout.spine[i, b]))
    for j in columns:
        for p in range(1, layout.n + 1):
            edges.append((layout.spine[i, j], layout.path[i, p, j]))
    return edges


def build_edge_gadget(l: int, m: int, mcc: MccInstance, layout: GadgetLayout) -> List[Edge]:
    """
    Edges of the gadget E_{l,m}: one isolated edge per edge of H between the
    classes l and m.
    """
    if not l < m:
        raise InvalidInstance("edge gadgets are indexed by pairs l < m")
    return list(layout.gadget_edges[l, m])


def reduce_mcc(mcc: MccInstance) -> Tuple[Instance, GadgetLayout]:
    """
    Build a MAPFCC instance with d = 1 and ell = 3 that is feasible exactly
    when the multicolored clique instance has a solution.
    """
    mcc = pad_classes(mcc)
    layout = GadgetLayout.allocate(mcc)
    k = mcc.k
    edges = []

    for i in range(1, k + 1):
        edges.extend(build_vertex_gadget(i, mcc, layout))
    for l, m in layout.pairs():
        edges.extend(build_edge_gadget(l, m, mcc, layout))

    for i in range(1, k):
        edges.extend((x, y) for x in layout.bottoms(i) for y in layout.tops(i + 1))
        last = max(layout.columns(i))
        first = min(layout.columns(i + 1))
        edges.append((layout.spine[i, last], layout.spine[i + 1, first]))

    for (l, m, p, q), u in layout.endpoint.items():
        edges.append((u, layout.path[l, p, m]))

    for l, m in layout.pairs():
        if m < k:
            following = (l, m + 1)
        elif l + 2 <= k:
            following = (l + 1, l + 2)
        else:
            continue
        edges.extend(
            (x, y) for x in layout.edge_bottoms(l, m) for y in layout.edge_tops(*following)
        )

    targets = [layout.clique[key] for key in layout.agent_keys()]
    edges.extend(
        (x, y) for a, x in enumerate(targets) for y in targets[a + 1:]
    )
    edges.extend((x, y) for x in layout.edge_gadget_vertices() for y in targets)

    graph = Graph.from_edges(layout.size, edges)
    agents = tuple((layout.spine[key], layout.clique[key]) for key in layout.agent_keys())
    log.info("reduced k=%s, n=%s to %s vertices and %s agents", k, layout.n, graph.n, len(agents))
    return Instance(graph, agents, d=1, ell=3), layout


def clique_schedule(
    mcc: MccInstance, layout: GadgetLayout, clique: Tuple[int, ...]
) -> Schedule:
    """
    Schedule of makespan 3 that moves every agent through the path of its
    class's clique vertex, the matching edge gadget and into the clique Q.
    """
    mcc = pad_classes(mcc)
    choice = {}
    for i, v in enumerate(clique, 1):
        try:
            choice[i] = mcc.classes[i - 1].index(v) + 1
        except ValueError:
            raise InvalidInstance(f"vertex {v} is not in class {i}") from None

    keys = layout.agent_keys()
    steps = [
        [layout.spine[key] for key in keys],
        [layout.path[i, choice[i], j] for i, j in keys],
        [layout.endpoint[i, j, choice[i], choice[j]] for i, j in keys],
        [layout.clique[key] for key in keys],
    ]
    return Schedule.from_positions(steps)


def clique_from_schedule(layout: GadgetLayout, sched: Schedule) -> Tuple[int, ...]:
    """
    Read the multicolored clique from the first turn of a feasible schedule:
    the agents of class i all stand on the path of the same vertex of H.
    """
    if sched.makespan < 1:
        raise InvalidSchedule("schedule has no first turn")
    where = {v: (i, p) for (i, p, _), v in layout.path.items()}
    choice = {}
    for (i, j), agent in layout.agents.items():
        position = sched[1][agent]
        if position not in where or where[position][0] != i:
            raise InvalidSchedule(f"agent alpha^{i}_{j} is not on a path of V_{i}")
        p = where[position][1]
        if choice.setdefault(i, p) != p:
            raise InvalidSchedule(f"agents of class {i} use different paths")
    return tuple(layout.classes[i - 1][choice[i] - 1] for i in range(1, layout.k + 1))


@dataclass(frozen=True)
class ReductionAudit:
    """
    Structural checks of a reduced instance.

    Attributes:
        distances:
            Every agent whose class pair has an edge in H starts at distance
            exactly 3 from its target; the others start farther away.
        clique_size:
            Q has k(k - 1) vertices.
        agent_count:
            There are k(k - 1) agents.
        gadget_edges:
            Each edge gadget has one edge per edge of H between its classes.
        injective:
            All named vertices have distinct ids.
    """

    distances: bool
    clique_size: bool
    agent_count: bool
    gadget_edges: bool
    injective: bool

    @property
    def ok(self) -> bool:
        return all(
            (self.distances, self.clique_size, self.agent_count, self.gadget_edges, self.injective)
        )


def audit_reduction(
    inst: Instance, layout: GadgetLayout, mcc: MccInstance
) -> ReductionAudit:
    mcc = pad_classes(mcc)
    k = mcc.k

    distances = True
    for (i, j), agent in layout.agents.items():
        s, t = inst.agents[agent]
        dist = bfs_distances(inst.graph, s)[t]
        pair = (min(i, j), max(i, j))
        if layout.gadget_edges[pair]:
            distances &= dist == 3
        else:
            distances &= dist > 3

    gadget_edges = all(
        len(layout.gadget_edges[l, m]) == len(list(mcc.cross_edges(l, m)))
        for l, m in layout.pairs()
    )
    named = [
        *layout.spine.values(),
        *layout.path.values(),
        *layout.endpoint.values(),
        *layout.clique.values(),
    ]
    return ReductionAudit(
        distances=distances,
        clique_size=len(layout.clique) == k * (k - 1),
        agent_count=inst.k == k * (k - 1) == len(layout.agents),
        gadget_edges=gadget_edges,
        injective=len(named) == len(set(named)) == inst.graph.n,
    )
