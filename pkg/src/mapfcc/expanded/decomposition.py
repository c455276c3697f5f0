import logging
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from .time_expanded import TimeExpandedGraph
from .witness import PathsWitness, check_witness
from ..core import Graph, UnionFind
from ..exceptions import InvalidDecomposition

log = logging.getLogger("mapfcc.expanded")


@dataclass(frozen=True)
class TreeDecomposition:
    """
    Rooted tree decomposition.

    Attributes:
        bags:
            Vertex set of each node.
        parent:
            Parent node of each node; None for the root.
    """

    bags: Tuple[FrozenSet[int], ...]
    parent: Tuple[Optional[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))
        object.__setattr__(self, "parent", tuple(self.parent))

    @property
    def width(self) -> int:
        return max((len(bag) for bag in self.bags), default=0) - 1

    def __len__(self):
        return len(self.bags)

    def tree_edges(self):
        for node, parent in enumerate(self.parent):
            if parent is not None:
                yield parent, node


def check_decomposition(td: TreeDecomposition, graph) -> None:
    """
    Raise :class:`InvalidDecomposition` unless td is a tree decomposition of
    the graph.

    The graph is anything with ``vertex_ids()`` and ``edge_pairs()``.
    """
    nodes = len(td.bags)
    if len(td.parent) != nodes:
        raise InvalidDecomposition("one parent entry is required per bag")
    roots = [x for x, p in enumerate(td.parent) if p is None]
    if nodes and len(roots) != 1:
        raise InvalidDecomposition(f"expected one root, found {len(roots)}")
    uf = UnionFind(range(nodes))
    for parent, node in td.tree_edges():
        if not 0 <= parent < nodes:
            raise InvalidDecomposition(f"node {node} has an invalid parent")
        if not uf.union(parent, node):
            raise InvalidDecomposition("parent pointers contain a cycle")

    holders = {}
    for node, bag in enumerate(td.bags):
        for v in bag:
            holders.setdefault(v, set()).add(node)
    for v in graph.vertex_ids():
        if v not in holders:
            raise InvalidDecomposition(f"vertex {v} is in no bag")
    for u, v in graph.edge_pairs():
        if not any(u in td.bags[x] for x in holders[v]):
            raise InvalidDecomposition(f"edge {u}-{v} is not covered")
    for v, nodes_of_v in holders.items():
        # nodes holding v must form a subtree: exactly one of them has its
        # parent outside the set
        tops = [x for x in nodes_of_v if td.parent[x] not in nodes_of_v]
        if len(tops) != 1:
            raise InvalidDecomposition(f"bags holding {v} are not connected")


def is_valid_decomposition(td: TreeDecomposition, graph) -> bool:
    try:
        check_decomposition(td, graph)
    except InvalidDecomposition:
        return False
    return True


def treewidth_upper_bound(g: Graph) -> Tuple[int, TreeDecomposition]:
    """
    Tree decomposition from a min-fill elimination ordering.

    The vertex whose elimination adds the fewest fill edges goes first, ties
    broken by lowest id. Eliminating v creates the bag with v and its current
    neighbors; the parent of that bag is the bag of the neighbor eliminated
    first afterwards. Bags without such neighbor are chained to the next bag
    in elimination order.
    """
    adj = {v: set(g.adjacency[v]) for v in range(g.n)}

    def fill(v):
        nbs = sorted(adj[v])
        return sum(
            1 for i, a in enumerate(nbs) for b in nbs[i + 1:] if b not in adj[a]
        )

    order = []
    bags = []
    neighbors_at_elimination = []
    remaining = set(range(g.n))
    while remaining:
        v = min(remaining, key=lambda x: (fill(x), x))
        nbs = adj.pop(v)
        for a in nbs:
            adj[a].discard(v)
            adj[a].update(nbs - {a})
        remaining.discard(v)
        order.append(v)
        bags.append(frozenset(nbs | {v}))
        neighbors_at_elimination.append(nbs)

    position = {v: i for i, v in enumerate(order)}
    parent = []
    for i, nbs in enumerate(neighbors_at_elimination):
        if nbs:
            parent.append(min(position[a] for a in nbs))
        elif i + 1 < len(order):
            parent.append(i + 1)
        else:
            parent.append(None)

    td = TreeDecomposition(tuple(bags), tuple(parent))
    return td.width, td


def lift_tree_decomposition(
    td: TreeDecomposition, gi: TimeExpandedGraph, w: PathsWitness
) -> TreeDecomposition:
    """
    Turn a tree decomposition of the movement graph into one of the
    time-expanded graph.

    Every vertex is replaced by its ell + 1 copies; then, for every agent,
    its start copy and target copy join every bag that meets the agent's
    path.

    Raises:
        InvalidDecomposition:
            If td is not a decomposition of the movement graph.
        InvalidWitness:
            If w does not describe a feasible schedule.
    """
    check_decomposition(td, gi.base)
    check_witness(gi, w)
    copies = [
        frozenset(gi.vertex(v, i) for v in bag for i in range(gi.ell + 1))
        for bag in td.bags
    ]
    bags = [set(bag) for bag in copies]
    for a in range(w.k):
        path = set(w.vertex_path(gi, a))
        edge = gi.agent_edge(a)
        for node, bag in enumerate(copies):
            if bag & path:
                bags[node].update((edge.u, edge.v))

    lifted = TreeDecomposition(tuple(bags), td.parent)
    assert lifted.width <= 3 * (gi.ell + 1) * (td.width + 1) - 1
    check_decomposition(lifted, gi)
    log.debug("lifted decomposition of width %s to width %s", td.width, lifted.width)
    return lifted
