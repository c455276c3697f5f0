from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, NamedTuple, Tuple

from ..core import Graph, Instance


class EdgeLabel(str, Enum):
    """
    Edge kinds of the time-expanded graph.
    """

    COPY = "copy"
    COMMUNICATION = "communication"
    CROSS = "cross"
    AGENT = "agent"


class LabeledEdge(NamedTuple):
    """
    An edge of the time-expanded graph, with ``u <= v``.

    Edges with different labels over the same endpoints are distinct edges.
    """

    u: int
    v: int
    label: EdgeLabel

    @classmethod
    def make(cls, u, v, label) -> "LabeledEdge":
        if u > v:
            u, v = v, u
        return cls(u, v, EdgeLabel(label))

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f"{x} is not an endpoint of {self}")


@dataclass(frozen=True)
class TimeExpandedGraph:
    """
    Labeled multigraph with one copy of the movement graph per turn.

    Vertex ``v`` of the movement graph at layer ``i`` has id ``i * n + v``
    and carries the label ``vertex_i``. Edges are stored in construction
    order: copy, communication, cross and finally agent edges.
    """

    instance: Instance
    edges: Tuple[LabeledEdge, ...]

    @property
    def base(self) -> Graph:
        return self.instance.graph

    @property
    def n_base(self) -> int:
        return self.instance.graph.n

    @property
    def ell(self) -> int:
        return self.instance.ell

    @property
    def num_vertices(self) -> int:
        return self.n_base * (self.ell + 1)

    def vertex(self, v: int, layer: int) -> int:
        return layer * self.n_base + v

    def layer_of(self, x: int) -> int:
        return x // self.n_base

    def base_of(self, x: int) -> int:
        return x % self.n_base

    def vertex_label(self, x: int) -> str:
        return f"vertex_{self.layer_of(x)}"

    def layer(self, i: int) -> range:
        return range(i * self.n_base, (i + 1) * self.n_base)

    @cached_property
    def incidence(self) -> Dict[int, Tuple[LabeledEdge, ...]]:
        """
        Edges incident to each vertex. A loop is listed once.
        """
        result = defaultdict(list)
        for e in self.edges:
            result[e.u].append(e)
            if not e.is_loop:
                result[e.v].append(e)
        return {x: tuple(result[x]) for x in range(self.num_vertices)}

    @cached_property
    def pair_labels(self) -> Dict[FrozenSet[int], FrozenSet[EdgeLabel]]:
        result = defaultdict(set)
        for e in self.edges:
            result[frozenset((e.u, e.v))].add(e.label)
        return {pair: frozenset(labels) for pair, labels in result.items()}

    def labels_between(self, u: int, v: int) -> FrozenSet[EdgeLabel]:
        return self.pair_labels.get(frozenset((u, v)), frozenset())

    def has_label(self, u: int, v: int, label: EdgeLabel) -> bool:
        return u != v and label in self.labels_between(u, v)

    def edges_with(self, label) -> Tuple[LabeledEdge, ...]:
        label = EdgeLabel(label)
        return tuple(e for e in self.edges if e.label is label)

    def count(self, label) -> int:
        return len(self.edges_with(label))

    @cached_property
    def communication_adjacency(self) -> Dict[int, Tuple[int, ...]]:
        result = defaultdict(list)
        for e in self.edges_with(EdgeLabel.COMMUNICATION):
            result[e.u].append(e.v)
            result[e.v].append(e.u)
        return {x: tuple(sorted(result[x])) for x in range(self.num_vertices)}

    def forward_neighbors(self, x: int) -> Tuple[int, ...]:
        """
        Vertices of the next layer joined to x by a copy or cross edge.
        """
        layer = self.layer_of(x)
        return tuple(
            sorted(
                e.other(x)
                for e in self.incidence[x]
                if e.label in (EdgeLabel.COPY, EdgeLabel.CROSS)
                and self.layer_of(e.other(x)) == layer + 1
            )
        )

    def agent_edge(self, agent: int) -> LabeledEdge:
        return self.edges_with(EdgeLabel.AGENT)[agent]

    #
    # Plain graph protocol used by tree decompositions
    #
    def vertex_ids(self):
        return range(self.num_vertices)

    def edge_pairs(self):
        seen = set()
        for e in self.edges:
            if not e.is_loop and (e.u, e.v) not in seen:
                seen.add((e.u, e.v))
                yield e.u, e.v

    def as_graph(self) -> Graph:
        """
        Underlying simple graph: labels merged, loops dropped.
        """
        return Graph.from_edges(self.num_vertices, self.edge_pairs())


def build_time_expanded(inst: Instance) -> TimeExpandedGraph:
    """
    Build the time-expanded graph of an instance.

    For every turn i in 1..ell, a copy edge joins v_{i-1} and v_i, and each
    edge uv of the movement graph gives the cross edges u_{i-1}v_i and
    v_{i-1}u_i. Every layer receives a communication edge per movement graph
    edge. Each agent adds an edge between its start in layer 0 and its target
    in the last layer.
    """
    g = inst.graph
    n, ell = g.n, inst.ell
    edges = []

    for i in range(1, ell + 1):
        for v in range(n):
            edges.append(LabeledEdge.make((i - 1) * n + v, i * n + v, "copy"))
    for i in range(ell + 1):
        for u, v in g.edges():
            edges.append(LabeledEdge.make(i * n + u, i * n + v, "communication"))
    for i in range(1, ell + 1):
        for u, v in g.edges():
            edges.append(LabeledEdge.make((i - 1) * n + u, i * n + v, "cross"))
            edges.append(LabeledEdge.make((i - 1) * n + v, i * n + u, "cross"))
    for s, t in inst.agents:
        edges.append(LabeledEdge.make(s, ell * n + t, "agent"))

    result = TimeExpandedGraph(inst, tuple(edges))
    assert result.count("copy") == n * ell
    assert result.count("communication") == g.m * (ell + 1)
    assert result.count("cross") == 2 * g.m * ell
    assert result.count("agent") == inst.k
    return result
