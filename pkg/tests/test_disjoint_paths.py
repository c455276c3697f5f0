import random

import mock
import pytest

from mapfcc.core import Graph, Instance, Schedule, validate_schedule
from mapfcc.exceptions import InvalidInstance
from mapfcc.expanded import (
    build_time_expanded,
    check_properties,
    check_witness,
    evaluate_formula,
    extract_ball,
    local_radius,
    paths_to_schedule,
    solve_disjoint_paths,
    solve_expanded,
    solve_local,
)
from mapfcc.search import MoveGenerator, Outcome, solve_bfs
from mapfcc.testing import placements, small_connected_graphs


@pytest.fixture
def train():
    return Instance(Graph.path(4), ((0, 2), (1, 3)), d=1, ell=4)


class TestDisjointPaths:
    def test_minimum_makespan_witness(self, train):
        result = solve_disjoint_paths(train)
        assert result.is_feasible
        assert result.makespan == 2
        assert result.witness.routes == ((0, 1, 2, 2, 2), (1, 2, 3, 3, 3))
        check_witness(build_time_expanded(train), result.witness)

    def test_witness_satisfies_every_property(self, train):
        gi = build_time_expanded(train)
        w = solve_disjoint_paths(train, gi=gi).witness
        S, X = w.edge_set(gi), w.layer_sets(gi)
        assert check_properties(gi, S, X, train.d).failing() == []
        assert evaluate_formula(gi, S, X, train.d) == (True, None)

    def test_single_agent_waits_on_its_target(self):
        inst = Instance(Graph.path(3), ((0, 2),), d=1, ell=4)
        gi = build_time_expanded(inst)
        result = solve_disjoint_paths(inst, gi=gi)
        assert result.makespan == 2
        assert result.witness.routes == ((0, 1, 2, 2, 2),)
        S, X = result.witness.edge_set(gi), result.witness.layer_sets(gi)
        assert check_properties(gi, S, X, 1).failing() == []
        assert evaluate_formula(gi, S, X, 1) == (True, None)

    def test_layers_come_from_the_move_generator(self, train):
        with mock.patch.object(
            MoveGenerator, 'moves', autospec=True, side_effect=MoveGenerator.moves
        ) as moves:
            solve_disjoint_paths(train)
        assert moves.call_count > 0

    def test_lanes(self, lanes):
        gi = build_time_expanded(lanes)
        result = solve_disjoint_paths(lanes, gi=gi)
        assert result.is_feasible
        assert result.makespan == solve_bfs(lanes).makespan == 8
        check_witness(gi, result.witness)
        sched = paths_to_schedule(gi, result.witness)
        assert validate_schedule(lanes, sched).ok

    def test_swap_is_infeasible(self):
        inst = Instance(Graph.path(2), ((0, 1), (1, 0)), d=1, ell=3)
        result = solve_disjoint_paths(inst)
        assert result.outcome is Outcome.INFEASIBLE
        assert result.witness is None

    def test_agents_already_home(self):
        inst = Instance(Graph.path(3), ((0, 0), (2, 2)), d=1, ell=2)
        result = solve_disjoint_paths(inst)
        assert result.makespan == 0
        assert result.witness.routes == ((0, 0, 0), (2, 2, 2))

    def test_disconnected_start(self):
        inst = Instance(Graph.path(3), ((0, 1), (2, 2)), d=1, ell=2)
        assert solve_disjoint_paths(inst).outcome is Outcome.INFEASIBLE

    def test_budget(self, lanes):
        result = solve_disjoint_paths(lanes, budget=3)
        assert result.outcome is Outcome.BUDGET
        assert result.stats.expanded_nodes == 3

    def test_agrees_with_bfs(self):
        rng = random.Random(5)
        for graph in small_connected_graphs(4):
            if graph.n < 2:
                continue
            for agents in placements(graph, 2, cap=6, rng=rng):
                for d in (1, 2):
                    inst = Instance(graph, agents, d=d, ell=3)
                    expected = solve_bfs(inst)
                    result = solve_disjoint_paths(inst)
                    assert result.outcome is expected.outcome, inst
                    assert result.makespan == expected.makespan, inst


class TestSolveExpanded:
    def test_trimmed_schedule(self, train):
        result = solve_expanded(train)
        assert result.schedule == Schedule.from_positions([(0, 1), (1, 2), (2, 3)])
        assert solve_expanded(train, gate=True).schedule == result.schedule

    def test_agents_already_home(self):
        inst = Instance(Graph.path(3), ((0, 0), (2, 2)), d=1, ell=2)
        result = solve_expanded(inst)
        assert result.outcome is Outcome.FEASIBLE
        assert result.schedule.makespan == 0

    def test_infeasible(self, path3):
        result = solve_expanded(path3)
        assert result.outcome is Outcome.INFEASIBLE
        assert result.schedule is None


class TestLocal:
    def test_extract_ball(self):
        sub, origin = extract_ball(Graph.path(30), 10, 2)
        assert sub == Graph.path(5)
        assert origin == (8, 9, 10, 11, 12)
        with pytest.raises(InvalidInstance):
            extract_ball(Graph.path(3), 0, -1)

    def test_radius(self, lanes):
        assert local_radius(lanes) == 4 * 1 + 9

    @pytest.mark.parametrize('method', ['bfs', 'expanded'])
    def test_solves_inside_the_ball(self, method):
        inst = Instance(Graph.path(30), ((20, 22), (21, 23)), d=1, ell=2)
        result = solve_local(inst, method=method)
        assert result.schedule == Schedule.from_positions([(20, 21), (21, 22), (22, 23)])
        assert validate_schedule(inst, result.schedule).ok

    def test_targets_out_of_reach(self):
        inst = Instance(Graph.path(30), ((0, 20),), d=1, ell=2)
        assert solve_local(inst).outcome is Outcome.INFEASIBLE

    def test_unknown_method(self, train):
        with pytest.raises(ValueError):
            solve_local(train, method='magic')
