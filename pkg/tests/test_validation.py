import pytest

from mapfcc.core import (
    Graph,
    Instance,
    Schedule,
    Violation,
    ViolationKind,
    validate_schedule,
)
from mapfcc.exceptions import InvalidSchedule


class TestValidSchedules:
    def test_lanes_schedule_is_valid(self, lanes, lanes_schedule):
        report = validate_schedule(lanes, lanes_schedule)
        assert report.ok
        assert report
        assert report.within_budget
        assert report.makespan == 9
        assert report.warnings == ()

    def test_budget_is_reported_separately(self, lanes, lanes_schedule):
        report = validate_schedule(lanes.replace(ell=8), lanes_schedule)
        assert report.ok
        assert not report.within_budget

    def test_initial_placement_only_warns(self):
        inst = Instance(Graph.path(4), ((0, 1), (2, 2)), d=1, ell=1)
        report = validate_schedule(inst, Schedule.from_positions([(0, 2), (1, 2)]))
        assert report.ok
        assert report.warnings == ('initial placement is not d-connected',)

    def test_makespan_zero(self):
        inst = Instance(Graph.path(4), ((0, 0), (3, 3)), d=1, ell=0)
        report = validate_schedule(inst, Schedule.from_positions([(0, 3)]))
        assert report.ok
        assert report.makespan == 0


class TestViolations:
    def test_swap(self):
        inst = Instance(Graph.path(2), ((0, 1), (1, 0)), d=1, ell=3)
        report = validate_schedule(inst, Schedule.from_positions([(0, 1), (1, 0)]))
        assert report.violations == (Violation(1, ViolationKind.SWAP, (0, 1)),)
        assert str(report.violations[0]) == 'turn 1: Swap (agents: 0, 1)'

    def test_collision(self):
        inst = Instance(Graph.path(3), ((0, 1), (1, 2)), d=1, ell=2)
        report = validate_schedule(inst, Schedule.from_positions([(0, 1), (1, 1), (1, 2)]))
        assert Violation(1, ViolationKind.COLLISION, (0, 1)) in report.violations

    def test_non_move(self):
        inst = Instance(Graph.path(4), ((0, 3),), d=1, ell=3)
        report = validate_schedule(inst, Schedule.from_positions([(0,), (2,), (3,)]))
        assert report.violations == (Violation(1, ViolationKind.NON_MOVE, (0,)),)

    def test_disconnected(self):
        inst = Instance(Graph.path(4), ((0, 0), (1, 2)), d=1, ell=1)
        report = validate_schedule(inst, Schedule.from_positions([(0, 1), (0, 2)]))
        assert report.kinds() == {ViolationKind.DISCONNECTED}
        assert validate_schedule(inst.replace(d=2), Schedule.from_positions([(0, 1), (0, 2)])).ok

    def test_wrong_endpoints(self):
        inst = Instance(Graph.path(4), ((0, 3),), d=1, ell=3)
        report = validate_schedule(inst, Schedule.from_positions([(1,), (2,)]))
        assert report.kinds() == {ViolationKind.WRONG_START, ViolationKind.WRONG_TARGET}
        assert report.violations[0].turn == 0
        assert report.violations[1].turn == 1

    def test_malformed_schedules_raise(self, lanes):
        with pytest.raises(InvalidSchedule):
            validate_schedule(lanes, Schedule.from_positions([(0, 4)]))
        with pytest.raises(InvalidSchedule):
            validate_schedule(lanes, Schedule.from_positions([(0, 4, 8, 16)]))
