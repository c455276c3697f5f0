from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple

from ..core import (
    Configuration,
    Instance,
    UNREACHABLE,
    bfs_distances,
    is_connected_in,
    power_graph,
)


class MoveGenerator:
    """
    Lazy generator of one-turn transitions of an instance.

    Agents are moved in index order by backtracking over their (sorted)
    closed neighborhoods. Collisions and swaps are rejected as soon as the
    offending agent is placed; d-connectivity is checked once per complete
    joint move against the precomputed communication graph.
    """

    def __init__(self, inst: Instance):
        self.instance = inst
        self.graph = inst.graph
        self.k = inst.k

    @cached_property
    def communication_graph(self):
        return power_graph(self.graph, self.instance.d)

    @cached_property
    def target_distances(self) -> Tuple[list, ...]:
        """
        Per-agent BFS distances to the agent's target.
        """
        return tuple(bfs_distances(self.graph, t) for t in self.instance.targets)

    def can_finish(self, positions: Sequence[int], turns: int) -> bool:
        """
        True if no agent is farther than ``turns`` steps from its target.
        """
        dist = self.target_distances
        return all(dist[a][v] <= turns for a, v in enumerate(positions))

    def moves(
        self, positions: Sequence[int], horizon: Optional[int] = None
    ) -> Iterator[Tuple[int, ...]]:
        """
        Iterate over all legal successor placements, in lexicographic order.

        Args:
            positions:
                Current placement.
            horizon:
                If given, an agent is never moved to a vertex whose distance
                to its target exceeds ``horizon``. This only discards moves
                that cannot be completed within the remaining turns.
        """
        k = self.k
        graph = self.graph
        previous_owner = {v: a for a, v in enumerate(positions)}
        chosen = [UNREACHABLE] * k
        used = set()

        if horizon is None:
            options = [graph.closed_neighborhood(v) for v in positions]
        else:
            dist = self.target_distances
            options = [
                tuple(u for u in graph.closed_neighborhood(v) if dist[a][u] <= horizon)
                for a, v in enumerate(positions)
            ]

        def extend(a):
            if a == k:
                move = tuple(chosen)
                if is_connected_in(self.communication_graph, move):
                    assert len(set(move)) == k, "successor is not injective"
                    yield move
                return
            for v in options[a]:
                if v in used:
                    continue
                b = previous_owner.get(v)
                if b is not None and b < a and chosen[b] == positions[a]:
                    continue
                chosen[a] = v
                used.add(v)
                yield from extend(a + 1)
                used.discard(v)
            chosen[a] = UNREACHABLE

        yield from extend(0)


def successors(inst: Instance, c: Configuration) -> List[Configuration]:
    """
    All configurations reachable from ``c`` in one turn.

    Each agent stays or moves to a neighbor, the result is injective, no two
    agents exchange positions and the occupied set is d-connected. The list
    is sorted lexicographically by position vector.
    """
    generator = MoveGenerator(inst)
    return [Configuration(move) for move in generator.moves(tuple(c))]
