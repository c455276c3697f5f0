import itertools
from dataclasses import dataclass
from typing import Optional, Tuple

from ..core import Graph
from ..exceptions import InvalidInstance


@dataclass(frozen=True)
class MccInstance:
    """
    A multicolored clique instance: a graph whose vertices are partitioned
    into k independent classes.

    Attributes:
        graph:
            The graph H.
        classes:
            ``classes[i - 1][p - 1]`` is the vertex v^i_p of H.
    """

    graph: Graph
    classes: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        classes = tuple(tuple(c) for c in self.classes)
        object.__setattr__(self, "classes", classes)
        seen = [v for c in classes for v in c]
        if len(seen) != len(set(seen)):
            raise InvalidInstance("vertex classes must be disjoint")
        if set(seen) != set(range(self.graph.n)):
            raise InvalidInstance("vertex classes must cover the graph")
        color = {v: i for i, c in enumerate(classes) for v in c}
        for u, v in self.graph.edges():
            if color[u] == color[v]:
                raise InvalidInstance(f"edge {u}-{v} lies inside a class")

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def class_size(self) -> int:
        return max((len(c) for c in self.classes), default=0)

    @property
    def is_padded(self) -> bool:
        return len({len(c) for c in self.classes}) <= 1

    def vertex(self, i: int, p: int) -> int:
        """
        The vertex v^i_p (1-based indices).
        """
        return self.classes[i - 1][p - 1]

    def has_edge(self, l: int, p: int, m: int, q: int) -> bool:
        return self.graph.has_edge(self.vertex(l, p), self.vertex(m, q))

    def cross_edges(self, l: int, m: int):
        """
        Pairs (p, q) such that v^l_p v^m_q is an edge, in lexicographic order.
        """
        for p in range(1, len(self.classes[l - 1]) + 1):
            for q in range(1, len(self.classes[m - 1]) + 1):
                if self.has_edge(l, p, m, q):
                    yield p, q


def pad_classes(mcc: MccInstance) -> MccInstance:
    """
    Append isolated dummy vertices to smaller classes until all classes have
    the same size.
    """
    if mcc.is_padded:
        return mcc
    size = mcc.class_size
    n = mcc.graph.n
    classes = []
    for c in mcc.classes:
        extra = tuple(range(n, n + size - len(c)))
        n += len(extra)
        classes.append(c + extra)
    graph = Graph.from_edges(n, mcc.graph.edges())
    return MccInstance(graph, tuple(classes))


def brute_clique(mcc: MccInstance) -> Optional[Tuple[int, ...]]:
    """
    First multicolored clique found by trying every choice of one vertex per
    class, or None.
    """
    g = mcc.graph
    for choice in itertools.product(*mcc.classes):
        if all(g.has_edge(u, v) for u, v in itertools.combinations(choice, 2)):
            return choice
    return None
