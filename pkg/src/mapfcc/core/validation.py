import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Tuple

from .connectivity import is_d_connected
from .instance import Instance, Schedule
from ..exceptions import InvalidSchedule

log = logging.getLogger("mapfcc.core")


class ViolationKind(str, Enum):
    """
    Reason a schedule is rejected. One kind per feasibility condition plus
    the swap ban and the endpoint checks.
    """

    NON_MOVE = "NonMove"
    COLLISION = "Collision"
    DISCONNECTED = "Disconnected"
    SWAP = "Swap"
    WRONG_TARGET = "WrongTarget"
    WRONG_START = "WrongStart"


@dataclass(frozen=True)
class Violation:
    turn: int
    kind: ViolationKind
    agents: Tuple[int, ...] = ()

    def __str__(self):
        agents = ", ".join(map(str, self.agents))
        return f"turn {self.turn}: {self.kind.value} (agents: {agents})"


@dataclass(frozen=True)
class ValidationReport:
    """
    Outcome of :func:`validate_schedule`.

    Attributes:
        violations:
            List of violations in the order they were found (by turn, then by
            kind).
        within_budget:
            True if the makespan does not exceed the instance budget. This is
            reported separately and does not affect :attr:`ok`.
        warnings:
            Non-fatal remarks, e.g., an initial placement that is not
            d-connected.
    """

    violations: Tuple[Violation, ...]
    within_budget: bool
    makespan: int
    warnings: Tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set:
        return {v.kind for v in self.violations}

    def __bool__(self):
        return self.ok


def validate_schedule(inst: Instance, sched: Schedule) -> ValidationReport:
    """
    Check a schedule against all feasibility conditions of an instance.

    Agents may stay in place or move to an adjacent vertex; every placement
    must be injective; the occupied set of every turn 1..mu must be
    d-connected; adjacent agents cannot exchange positions; the last
    placement must be the target configuration.

    Raises:
        InvalidSchedule:
            If the schedule places a different number of agents than the
            instance declares.
    """
    if sched.k != inst.k:
        raise InvalidSchedule(
            f"schedule places {sched.k} agents, instance has {inst.k}"
        )
    g = inst.graph
    n = g.n
    for turn, step in enumerate(sched):
        if any(not 0 <= v < n for v in step):
            raise InvalidSchedule(f"turn {turn}: vertex id out of range")

    violations: List[Violation] = []
    warnings = []
    first = sched[0]

    wrong_start = tuple(a for a in range(inst.k) if first[a] != inst.starts[a])
    if wrong_start:
        violations.append(Violation(0, ViolationKind.WRONG_START, wrong_start))
    if first.is_injective() and not is_d_connected(g, inst.d, first):
        warnings.append("initial placement is not d-connected")

    for turn in range(1, len(sched)):
        prev, curr = sched[turn - 1], sched[turn]

        non_move = tuple(
            a
            for a in range(inst.k)
            if curr[a] != prev[a] and not g.has_edge(prev[a], curr[a])
        )
        if non_move:
            violations.append(Violation(turn, ViolationKind.NON_MOVE, non_move))

        owner = {}
        for a, v in enumerate(curr):
            if v in owner:
                violations.append(
                    Violation(turn, ViolationKind.COLLISION, (owner[v], a))
                )
            else:
                owner[v] = a

        if not is_d_connected(g, inst.d, curr):
            violations.append(
                Violation(turn, ViolationKind.DISCONNECTED, tuple(range(inst.k)))
            )

        previous_owner = {v: a for a, v in enumerate(prev)}
        for a in range(inst.k):
            b = previous_owner.get(curr[a])
            if b is not None and b > a and curr[b] == prev[a]:
                if g.has_edge(prev[a], prev[b]):
                    violations.append(Violation(turn, ViolationKind.SWAP, (a, b)))

    last = sched[-1]
    wrong_target = tuple(a for a in range(inst.k) if last[a] != inst.targets[a])
    if wrong_target:
        violations.append(
            Violation(sched.makespan, ViolationKind.WRONG_TARGET, wrong_target)
        )

    report = ValidationReport(
        violations=tuple(violations),
        within_budget=sched.makespan <= inst.ell,
        makespan=sched.makespan,
        warnings=tuple(warnings),
    )
    if not report.ok:
        log.debug("schedule rejected: %s", "; ".join(map(str, violations)))
    return report
