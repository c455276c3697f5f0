import logging
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from ..core import Configuration, Graph, Instance, Schedule, tree_path
from ..exceptions import InvalidSchedule, NotATree, PruneError

log = logging.getLogger("mapfcc.treeprune")


@dataclass(frozen=True)
class PruneStep:
    """
    A single pruning step around a hub vertex.

    All ids refer to the tree the step was applied to, except ``origin``
    which maps ids of the resulting tree back to that input tree.

    Attributes:
        hub:
            The high degree vertex u.
        component:
            T_u, the component of the tree minus the relevant neighbors of u
            that contains u.
        removed:
            Vertices of T_u that were deleted.
        kept_neighbors:
            Neighbors of u inside T_u that survived, in increasing id order.
        origin:
            ``origin[new_id]`` is the id of the vertex in the input tree.
    """

    hub: int
    component: FrozenSet[int]
    removed: FrozenSet[int]
    kept_neighbors: Tuple[int, ...]
    origin: Tuple[int, ...]

    def lift(self, origin: Tuple[int, ...]) -> "PruneStep":
        """
        Re-express the step in the ids of an earlier tree, given the id map
        of the tree this step was applied to.
        """
        return PruneStep(
            hub=origin[self.hub],
            component=frozenset(origin[v] for v in self.component),
            removed=frozenset(origin[v] for v in self.removed),
            kept_neighbors=tuple(origin[v] for v in self.kept_neighbors),
            origin=tuple(origin[v] for v in self.origin),
        )


@dataclass(frozen=True)
class PruneTrace:
    """
    Full record of :func:`prune`.

    Attributes:
        steps:
            Pruning steps in the order they were applied, in original ids.
        origin:
            ``origin[v]`` is the original id of vertex v of the pruned tree.
    """

    steps: Tuple[PruneStep, ...]
    origin: Tuple[int, ...]

    @property
    def removed(self) -> FrozenSet[int]:
        return frozenset().union(*(step.removed for step in self.steps))

    def new_ids(self) -> dict:
        return {old: new for new, old in enumerate(self.origin)}

    def translate(self, pruned: Graph, inst: Instance) -> Instance:
        """
        Express an instance given in original ids over the pruned tree.
        """
        return inst.translate(pruned, self.new_ids())


def require_tree(graph: Graph, hint: str = "") -> None:
    if not graph.is_tree():
        raise NotATree(f"graph is not a tree{hint}")


def relevant_neighbors(tree: Graph, inst: Instance, u: int) -> FrozenSet[int]:
    """
    Neighbors of u that lie on the tree path from some start to u or from u
    to some target.
    """
    require_tree(tree)
    on_paths = set()
    for s, t in inst.agents:
        on_paths.update(tree_path(tree, s, u))
        on_paths.update(tree_path(tree, u, t))
    return frozenset(v for v in tree.adjacency[u] if v in on_paths)


def hub_component(tree: Graph, u: int, relevant: FrozenSet[int]) -> FrozenSet[int]:
    """
    Vertices reachable from u without entering ``relevant``.
    """
    seen = {u}
    stack = [u]
    while stack:
        v = stack.pop()
        for w in tree.adjacency[v]:
            if w not in seen and w not in relevant:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def prune_once(tree: Graph, inst: Instance, u: int) -> Tuple[Graph, PruneStep]:
    """
    Remove the part of the tree hanging from u that no agent needs, keeping
    u and its k lowest-id neighbors in that part.

    Raises:
        PruneError:
            If u has degree at most 3k.
    """
    require_tree(tree)
    k = inst.k
    if tree.degree(u) <= 3 * k:
        raise PruneError(f"vertex {u} has degree {tree.degree(u)} <= 3k = {3 * k}")

    relevant = relevant_neighbors(tree, inst, u)
    component = hub_component(tree, u, relevant)
    kept_neighbors = tuple(v for v in tree.adjacency[u] if v in component)[:k]
    removed = component - {u} - set(kept_neighbors)

    pruned, origin = tree.induced_subgraph(v for v in range(tree.n) if v not in removed)
    step = PruneStep(u, component, frozenset(removed), kept_neighbors, origin)
    log.debug("pruned %s vertices around hub %s", len(removed), u)
    return pruned, step


def prune(tree: Graph, inst: Instance) -> Tuple[Graph, PruneTrace]:
    """
    Apply :func:`prune_once` to the lowest-id vertex of degree larger than 3k
    until no such vertex remains.

    The result is a tree of maximum degree at most 3k that contains every
    start and target.
    """
    require_tree(tree)
    bound = 3 * inst.k
    current, current_inst = tree, inst
    origin = tuple(range(tree.n))
    steps = []

    while True:
        hubs = [v for v in range(current.n) if current.degree(v) > bound]
        if not hubs:
            break
        pruned, step = prune_once(current, current_inst, hubs[0])
        steps.append(step.lift(origin))
        origin = tuple(origin[v] for v in step.origin)
        new_ids = {old: new for new, old in enumerate(step.origin)}
        current_inst = current_inst.translate(pruned, new_ids)
        current = pruned

    assert current.max_degree <= bound, "pruned tree exceeds degree bound"
    return current, PruneTrace(tuple(steps), origin)


def project_schedule(
    tree: Graph, inst: Instance, step: PruneStep, sched: Schedule
) -> Schedule:
    """
    Transform a schedule on ``tree`` into a schedule on the tree produced by
    ``step``.

    Whenever agent ``a_j`` stands inside ``T_u`` but not on u, it is parked on
    the j-th kept neighbor of u instead. Valid whenever d >= 2.
    """
    require_tree(tree)
    if sched.k != inst.k:
        raise InvalidSchedule(f"schedule places {sched.k} agents, instance has {inst.k}")
    inside = step.component - {step.hub}
    new_ids = {old: new for new, old in enumerate(step.origin)}
    rows = []
    for config in sched:
        row = []
        for j, v in enumerate(config):
            if v in inside:
                v = step.kept_neighbors[j]
            row.append(new_ids[v])
        rows.append(Configuration(tuple(row)))
    return Schedule(tuple(rows))
