from collections import defaultdict, deque
from typing import AbstractSet, NamedTuple, Sequence

from .time_expanded import EdgeLabel, LabeledEdge, TimeExpandedGraph
from ..core import UnionFind


class Properties(NamedTuple):
    """
    Truth value of each property of an assignment (S, X_0, ..., X_ell).
    """

    layer_labels: bool
    edge_labels: bool
    inner_degrees: bool
    end_degrees: bool
    isolation: bool
    agent_paths: bool
    no_swaps: bool
    connectivity: bool

    def failing(self) -> list:
        """
        1-based indices of the properties that do not hold.
        """
        return [i + 1 for i, ok in enumerate(self) if not ok]


def check_properties(
    gi: TimeExpandedGraph,
    S: AbstractSet[LabeledEdge],
    X: Sequence[AbstractSet[int]],
    d: int,
) -> Properties:
    """
    Evaluate the eight properties whose joint satisfiability characterizes
    yes-instances.

    Args:
        gi:
            Time-expanded graph.
        S:
            Set of edges of ``gi``.
        X:
            Vertex sets X_0, ..., X_ell.
        d:
            Communication range.
    """
    ell = gi.ell
    incident = defaultdict(list)
    for e in S:
        incident[e.u].append(e)
        if not e.is_loop:
            incident[e.v].append(e)

    def degree(x):
        return len(incident[x])

    layer_labels = all(gi.layer_of(x) == i for i, members in enumerate(X) for x in members)
    edge_labels = all(e.label in (EdgeLabel.COPY, EdgeLabel.CROSS) for e in S)

    inner_degrees = True
    for i in range(1, ell):
        for x in X[i]:
            others = [e.other(x) for e in incident[x] if not e.is_loop]
            if not (
                degree(x) == 2
                and any(y in X[i - 1] for y in others)
                and any(y in X[i + 1] for y in others)
            ):
                inner_degrees = False

    end_degrees = all(degree(x) == 1 for x in set(X[0]) | set(X[ell]))

    covered = set().union(*X)
    isolation = all(degree(x) == 0 for x in incident if x not in covered)

    uf = UnionFind()
    for e in S:
        uf.union(e.u, e.v)
    agent_paths = all(
        not e.is_loop and uf.connected(e.u, e.v) for e in gi.edges_with(EdgeLabel.AGENT)
    )

    no_swaps = not _has_copy_swap(gi, S)

    connectivity = all(_communication_connected(gi, members, d) for members in X)

    return Properties(
        layer_labels,
        edge_labels,
        inner_degrees,
        end_degrees,
        isolation,
        agent_paths,
        no_swaps,
        connectivity,
    )


def _has_copy_swap(gi, S) -> bool:
    # e1 = u1v1 and e2 = u2v2 in S, both from layer i - 1 to layer i, with
    # copy edges u1v2 and u2v1
    forward = {}
    for e in S:
        u, v = sorted((e.u, e.v), key=gi.layer_of)
        if gi.layer_of(v) == gi.layer_of(u) + 1:
            forward[u, v] = e
    for (u1, v1), e1 in forward.items():
        i = gi.layer_of(v1)
        u2 = gi.vertex(gi.base_of(v1), i - 1)
        v2 = gi.vertex(gi.base_of(u1), i)
        e2 = forward.get((u2, v2))
        if e2 is None or e2 == e1:
            continue
        if gi.has_label(u1, v2, EdgeLabel.COPY) and gi.has_label(u2, v1, EdgeLabel.COPY):
            return True
    return False


def _communication_connected(gi, members, d) -> bool:
    members = set(members)
    if not members:
        return True
    uf = UnionFind(members)
    adjacency = gi.communication_adjacency
    for x in members:
        dist = {x: 0}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            if dist[y] == d:
                continue
            for z in adjacency[y]:
                if z not in dist:
                    dist[z] = dist[y] + 1
                    queue.append(z)
        for y in dist:
            if y in members:
                uf.union(x, y)
    return uf.count() == 1
