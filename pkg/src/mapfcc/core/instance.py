from dataclasses import dataclass
from typing import Mapping, Sequence, Tuple

from .graph import Graph
from ..exceptions import InvalidInstance, InvalidSchedule


@dataclass(frozen=True)
class Configuration:
    """
    Placement of all agents in a single turn.

    ``positions[a]`` is the vertex occupied by agent ``a``.
    """

    positions: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.positions, tuple):
            object.__setattr__(self, "positions", tuple(self.positions))

    def __len__(self):
        return len(self.positions)

    def __getitem__(self, agent):
        return self.positions[agent]

    def __iter__(self):
        return iter(self.positions)

    def occupied_set(self) -> frozenset:
        return frozenset(self.positions)

    def is_injective(self) -> bool:
        return len(set(self.positions)) == len(self.positions)


@dataclass(frozen=True)
class Instance:
    """
    A MAPFCC instance ``<G, agents, d, ell>``.

    Attributes:
        graph:
            Movement graph.
        agents:
            Ordered tuple of (start, target) pairs, one per agent.
        d:
            Communication range: agents at graph distance at most d are
            directly connected.
        ell:
            Makespan budget.
    """

    graph: Graph
    agents: Tuple[Tuple[int, int], ...]
    d: int
    ell: int

    def __post_init__(self):
        agents = tuple((int(s), int(t)) for s, t in self.agents)
        object.__setattr__(self, "agents", agents)
        if not agents:
            raise InvalidInstance("an instance needs at least one agent")
        if self.d < 1:
            raise InvalidInstance("communication range d must be at least 1")
        if self.ell < 0:
            raise InvalidInstance("makespan budget ell must be non-negative")
        n = self.graph.n
        for idx, (s, t) in enumerate(agents):
            if not (0 <= s < n and 0 <= t < n):
                raise InvalidInstance(f"agent {idx} uses a vertex out of range")
        starts = [s for s, _ in agents]
        targets = [t for _, t in agents]
        if len(set(starts)) != len(starts):
            raise InvalidInstance("duplicate start")
        if len(set(targets)) != len(targets):
            raise InvalidInstance("duplicate target")

    @property
    def k(self) -> int:
        return len(self.agents)

    @property
    def starts(self) -> Tuple[int, ...]:
        return tuple(s for s, _ in self.agents)

    @property
    def targets(self) -> Tuple[int, ...]:
        return tuple(t for _, t in self.agents)

    def start_configuration(self) -> Configuration:
        return Configuration(self.starts)

    def target_configuration(self) -> Configuration:
        return Configuration(self.targets)

    def replace(self, **kwargs) -> "Instance":
        """
        Copy of the instance with some fields replaced.
        """
        data = dict(graph=self.graph, agents=self.agents, d=self.d, ell=self.ell)
        data.update(kwargs)
        return Instance(**data)

    def translate(self, graph: Graph, old_to_new: Mapping[int, int]) -> "Instance":
        """
        Re-express the instance over a relabelled subgraph.

        Raises:
            InvalidInstance:
                If some start or target has no image in the new graph.
        """
        try:
            agents = tuple((old_to_new[s], old_to_new[t]) for s, t in self.agents)
        except KeyError as exc:
            raise InvalidInstance(f"vertex {exc.args[0]} is not kept") from None
        return Instance(graph, agents, self.d, self.ell)


@dataclass(frozen=True)
class Schedule:
    """
    A sequence of configurations ``s_0, ..., s_mu``.

    The makespan is the number of turns, ``len(steps) - 1``.
    """

    steps: Tuple[Configuration, ...]

    def __post_init__(self):
        steps = tuple(
            step if isinstance(step, Configuration) else Configuration(tuple(step))
            for step in self.steps
        )
        object.__setattr__(self, "steps", steps)
        if not steps:
            raise InvalidSchedule("a schedule needs at least the initial placement")
        k = len(steps[0])
        if any(len(step) != k for step in steps):
            raise InvalidSchedule("all steps must place the same number of agents")

    @classmethod
    def from_positions(cls, rows: Sequence[Sequence[int]]) -> "Schedule":
        return cls(tuple(Configuration(tuple(row)) for row in rows))

    @property
    def makespan(self) -> int:
        return len(self.steps) - 1

    @property
    def k(self) -> int:
        return len(self.steps[0])

    def __len__(self):
        return len(self.steps)

    def __getitem__(self, turn):
        return self.steps[turn]

    def __iter__(self):
        return iter(self.steps)

    def padded(self, length: int) -> "Schedule":
        """
        Extend the schedule to makespan ``length`` by keeping every agent in
        its last position.
        """
        if length < self.makespan:
            raise InvalidSchedule("cannot pad a schedule to a shorter makespan")
        extra = (self.steps[-1],) * (length - self.makespan)
        return Schedule(self.steps + extra)

    def relabel(self, origin: Sequence[int]) -> "Schedule":
        """
        Map every vertex id ``v`` to ``origin[v]``.
        """
        return Schedule(
            tuple(Configuration(tuple(origin[v] for v in step)) for step in self.steps)
        )
