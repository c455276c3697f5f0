from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from ..core import Schedule


class Outcome(str, Enum):
    """
    Answer of a solver run.

    BUDGET means the node budget was exhausted before a decision was reached;
    it is never reported as INFEASIBLE.
    """

    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    BUDGET = "budget"


@dataclass
class SearchStats:
    """
    Counters collected during a search.

    Attributes:
        expanded_nodes:
            Number of configurations whose successors were generated.
        generated_nodes:
            Number of configurations produced, duplicates included. The start
            configuration counts as generated.
        max_frontier:
            Largest frontier (BFS) or deepest path (DFS) seen.
        connected_set_estimate:
            Number of connected vertex sets of size ``min(kd, n)`` around the
            first agent's start, when requested.
    """

    expanded_nodes: int = 0
    generated_nodes: int = 0
    max_frontier: int = 0
    connected_set_estimate: Optional[int] = None

    def as_dict(self) -> dict:
        return {
            "expanded_nodes": self.expanded_nodes,
            "generated_nodes": self.generated_nodes,
            "max_frontier": self.max_frontier,
            "connected_set_estimate": self.connected_set_estimate,
        }


@dataclass(frozen=True)
class SearchResult:
    outcome: Outcome
    schedule: Optional[Schedule] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def is_feasible(self) -> bool:
        return self.outcome is Outcome.FEASIBLE

    @property
    def makespan(self) -> Optional[int]:
        return None if self.schedule is None else self.schedule.makespan
