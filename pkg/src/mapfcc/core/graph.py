import sys
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Tuple

import networkx as nx

from ..exceptions import InvalidInstance

UNREACHABLE = sys.maxsize


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph over the dense vertex ids ``0..n-1``.

    Attributes:
        n:
            Number of vertices.
        adjacency:
            Per-vertex tuple of neighbor ids, sorted in ascending order.

    Graphs are immutable. Use the :meth:`from_edges` constructor (or one of the
    shape constructors such as :meth:`grid`) instead of filling adjacency
    lists by hand: it enforces symmetry and rejects self-loops and parallel
    edges.
    """

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise InvalidInstance("adjacency must have one entry per vertex")
        for v, nbs in enumerate(self.adjacency):
            if list(nbs) != sorted(set(nbs)):
                raise InvalidInstance(f"neighbors of {v} must be sorted and unique")
            for u in nbs:
                if u == v:
                    raise InvalidInstance(f"self-loop at vertex {v}")
                if not 0 <= u < self.n or v not in self.neighbor_sets[u]:
                    raise InvalidInstance(f"adjacency is not symmetric at {v}-{u}")

    #
    # Constructors
    #
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        Create graph from an edge list.

        Raises:
            InvalidInstance:
                If an endpoint is out of range, an edge is a self-loop or the
                same edge is listed twice (in any orientation).
        """
        if n < 0:
            raise InvalidInstance("vertex count must be non-negative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInstance(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise InvalidInstance(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise InvalidInstance(f"duplicate edge {u}-{v}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(tuple(sorted(nbs)) for nbs in adj))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise InvalidInstance("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        """
        Star with center 0 and leaves ``1..leaves``.
        """
        return cls.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    @classmethod
    def grid(cls, width: int, height: int) -> "Graph":
        """
        The width x height grid graph, vertices numbered row-major.
        """
        edges = []
        for row in range(height):
            for col in range(width):
                v = row * width + col
                if col + 1 < width:
                    edges.append((v, v + 1))
                if row + 1 < height:
                    edges.append((v, v + width))
        return cls.from_edges(width * height, edges)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """
        Convert a networkx graph with nodes ``0..n-1``.
        """
        n = graph.number_of_nodes()
        if set(graph.nodes) != set(range(n)):
            raise InvalidInstance("networkx graph must use nodes 0..n-1")
        return cls.from_edges(n, graph.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    #
    # Accessors
    #
    @cached_property
    def neighbor_sets(self) -> Tuple[frozenset, ...]:
        return tuple(frozenset(nbs) for nbs in self.adjacency)

    @cached_property
    def m(self) -> int:
        return sum(len(nbs) for nbs in self.adjacency) // 2

    @cached_property
    def max_degree(self) -> int:
        return max((len(nbs) for nbs in self.adjacency), default=0)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> Tuple[int, ...]:
        """
        Sorted tuple with v and all its neighbors.
        """
        return tuple(sorted((v, *self.adjacency[v])))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self):
        """
        Iterate over edges as pairs (u, v) with u < v, in lexicographic order.
        """
        for u, nbs in enumerate(self.adjacency):
            for v in nbs:
                if u < v:
                    yield u, v

    def vertex_ids(self):
        return range(self.n)

    def edge_pairs(self):
        return self.edges()

    def is_tree(self) -> bool:
        return self.n > 0 and nx.is_tree(self.to_networkx())

    def is_connected(self) -> bool:
        # networkx leaves connectivity of the null graph undefined
        return self.n == 0 or nx.is_connected(self.to_networkx())

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", Tuple[int, ...]]:
        """
        Induced subgraph on the given vertex set.

        Vertices are relabelled in increasing order of their original ids.

        Returns:
            A pair (subgraph, origin) in which ``origin[new_id]`` is the
            original id of each vertex in the subgraph.
        """
        origin = tuple(sorted(set(vertices)))
        new_id = {v: i for i, v in enumerate(origin)}
        adjacency = tuple(
            tuple(sorted(new_id[u] for u in self.adjacency[v] if u in new_id))
            for v in origin
        )
        return Graph(len(origin), adjacency), origin


def bfs_distances(g: Graph, src: int, cap: Optional[int] = None) -> list:
    """
    Breadth-first distances from ``src``.

    Args:
        g:
            Input graph.
        src:
            Source vertex.
        cap:
            If given, the search does not go deeper than ``cap`` edges and all
            vertices farther than that are reported as unreachable.

    Returns:
        A list with the distance of each vertex; unreachable vertices hold the
        :data:`UNREACHABLE` sentinel.
    """
    if not 0 <= src < g.n:
        raise InvalidInstance(f"source vertex {src} out of range")
    dist = [UNREACHABLE] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if cap is not None and dist[v] >= cap:
            continue
        for u in g.adjacency[v]:
            if dist[u] == UNREACHABLE:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def ball(g: Graph, center: int, radius: int) -> frozenset:
    """
    The closed ball N^radius[center], as a set of vertex ids.
    """
    dist = bfs_distances(g, center, cap=radius)
    return frozenset(v for v, x in enumerate(dist) if x != UNREACHABLE)


def power_graph(g: Graph, d: int) -> Graph:
    """
    The communication graph: same vertices as ``g`` and an edge uv whenever
    ``1 <= dist_g(u, v) <= d``.
    """
    if d < 1:
        raise InvalidInstance("communication range must be at least 1")
    adjacency = []
    for v in range(g.n):
        near = ball(g, v, d) - {v}
        adjacency.append(tuple(sorted(near)))
    return Graph(g.n, tuple(adjacency))


def tree_path(g: Graph, src: int, dst: int) -> Tuple[int, ...]:
    """
    Vertices of a shortest src-dst path (the unique one, in a tree).
    """
    parent = {src: None}
    queue = deque([src])
    while queue and dst not in parent:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u not in parent:
                parent[u] = v
                queue.append(u)
    if dst not in parent:
        raise InvalidInstance(f"no path between {src} and {dst}")
    path = [dst]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return tuple(reversed(path))
