from typing import Iterable

from .graph import Graph, UNREACHABLE, bfs_distances
from .unionfind import UnionFind
from ..exceptions import InvalidInstance


def is_d_connected(g: Graph, d: int, vertices: Iterable[int]) -> bool:
    """
    Check if the vertex set is connected in the d-th power of g.

    Pairs at graph distance at most d are merged in a union-find structure;
    distances come from a BFS truncated at depth d from every member.

    Raises:
        InvalidInstance:
            If the set is empty or d < 1.
    """
    members = set(vertices)
    if not members:
        raise InvalidInstance("d-connectivity of the empty set is undefined")
    if d < 1:
        raise InvalidInstance("communication range must be at least 1")
    uf = UnionFind(members)
    for w in members:
        dist = bfs_distances(g, w, cap=d)
        for x in members:
            if dist[x] != UNREACHABLE:
                uf.union(w, x)
    return uf.count() == 1


def is_connected_in(power: Graph, vertices: Iterable[int]) -> bool:
    """
    Check if the vertex set induces a connected subgraph of ``power``.

    Used with a precomputed communication graph, where it is equivalent to
    :func:`is_d_connected` but much cheaper when called many times.
    """
    members = list(vertices)
    if not members:
        raise InvalidInstance("connectivity of the empty set is undefined")
    inside = set(members)
    seen = {members[0]}
    stack = [members[0]]
    while stack:
        v = stack.pop()
        for u in power.adjacency[v]:
            if u in inside and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(inside)
