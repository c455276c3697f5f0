import itertools
import random

import networkx as nx
import pytest

from mapfcc.core import Configuration, Graph, Instance, bfs_distances, validate_schedule
from mapfcc.search import (
    MoveGenerator,
    Outcome,
    config_key,
    count_connected_sets,
    decode_key,
    oracle_solve,
    solve_bfs,
    successors,
)
from mapfcc.exceptions import InvalidInstance
from mapfcc.testing import random_connected_graph


def assert_valid(inst, result):
    assert result.outcome is Outcome.FEASIBLE
    report = validate_schedule(inst, result.schedule)
    assert report.ok and report.within_budget


class TestKeys:
    def test_round_trip_and_order(self):
        assert decode_key(config_key((3, 70000, 0))) == (3, 70000, 0)
        assert config_key((1, 2)) < config_key((1, 3)) < config_key((2, 0))
        assert len(config_key((1, 2, 3))) == 12


class TestSuccessors:
    def test_path_successors(self):
        inst = Instance(Graph.path(3), ((0, 1), (1, 2)), d=1, ell=1)
        result = successors(inst, Configuration((0, 1)))
        assert result == [Configuration((0, 1)), Configuration((1, 2))]

    def test_swaps_are_excluded(self):
        inst = Instance(Graph.path(2), ((0, 1), (1, 0)), d=1, ell=3)
        assert successors(inst, Configuration((0, 1))) == [Configuration((0, 1))]

    def test_larger_range_allows_gaps(self):
        inst = Instance(Graph.path(3), ((0, 1), (1, 2)), d=2, ell=1)
        result = successors(inst, Configuration((0, 1)))
        assert Configuration((0, 2)) in result
        assert Configuration((1, 0)) not in result

    def test_moves_are_reversible(self):
        rng = random.Random(7)
        for _ in range(60):
            graph = random_connected_graph(rng.randint(2, 7), rng.randint(0, 4), rng)
            k = rng.randint(1, min(3, graph.n))
            dist = bfs_distances(graph, rng.randrange(graph.n))
            occupied = sorted(range(graph.n), key=dist.__getitem__)[:k]
            rng.shuffle(occupied)
            inst = Instance(graph, tuple((v, v) for v in occupied), d=rng.randint(1, 2), ell=1)
            c = inst.start_configuration()
            for after in successors(inst, c):
                assert c in successors(inst, after), (inst, after)

    def test_horizon_discards_hopeless_moves(self):
        inst = Instance(Graph.path(4), ((0, 3),), d=1, ell=3)
        generator = MoveGenerator(inst)
        assert list(generator.moves((2,), horizon=0)) == [(3,)]
        assert list(generator.moves((2,))) == [(1,), (2,), (3,)]
        assert generator.can_finish((0,), 3)
        assert not generator.can_finish((0,), 2)


class TestBfs:
    def test_lanes_need_more_than_three_turns(self, lanes):
        assert solve_bfs(lanes.replace(ell=3)).outcome is Outcome.INFEASIBLE

    def test_lanes_within_nine_turns(self, lanes):
        result = solve_bfs(lanes)
        assert_valid(lanes, result)
        assert result.makespan <= 9

    def test_lanes_with_long_range(self, lanes):
        inst = lanes.replace(d=6, ell=3)
        result = solve_bfs(inst)
        assert_valid(inst, result)
        assert result.makespan == 3

    def test_trivial_instance(self):
        inst = Instance(Graph.path(3), ((0, 0), (2, 2)), d=1, ell=0)
        result = solve_bfs(inst)
        assert result.outcome is Outcome.FEASIBLE
        assert result.makespan == 0

    def test_disconnected_start_is_infeasible(self):
        inst = Instance(Graph.path(4), ((0, 1), (3, 2)), d=1, ell=5)
        assert solve_bfs(inst).outcome is Outcome.INFEASIBLE

    def test_unreachable_target_is_infeasible(self, path3):
        assert solve_bfs(path3).outcome is Outcome.INFEASIBLE
        assert solve_bfs(path3.replace(ell=2)).makespan == 2

    def test_budget(self, lanes):
        result = solve_bfs(lanes, budget=5)
        assert result.outcome is Outcome.BUDGET
        assert result.schedule is None
        assert result.stats.expanded_nodes == 5

    def test_counts_connected_sets(self, lanes):
        result = solve_bfs(lanes.replace(ell=3), count_sets=True)
        assert result.stats.connected_set_estimate == count_connected_sets(lanes.graph, 0, 4)
        assert result.stats.generated_nodes >= 1

    def test_stats_as_dict(self, lanes):
        stats = solve_bfs(lanes.replace(ell=3)).stats
        assert stats.as_dict() == {
            'expanded_nodes': stats.expanded_nodes,
            'generated_nodes': stats.generated_nodes,
            'max_frontier': stats.max_frontier,
            'connected_set_estimate': None,
        }
        assert list(stats.as_dict()) == [
            'expanded_nodes', 'generated_nodes', 'max_frontier', 'connected_set_estimate'
        ]


class TestOracle:
    @pytest.mark.parametrize('ell', [0, 1, 2, 3, 4])
    def test_agrees_with_bfs_on_paths(self, ell):
        inst = Instance(Graph.path(4), ((0, 2), (1, 3)), d=1, ell=ell)
        expected = solve_bfs(inst)
        result = oracle_solve(inst)
        assert result.outcome is expected.outcome
        assert result.makespan == expected.makespan

    def test_oracle_schedule_is_valid(self):
        inst = Instance(Graph.cycle(5), ((0, 2), (1, 3)), d=1, ell=4)
        result = oracle_solve(inst)
        assert_valid(inst, result)
        assert result.makespan == solve_bfs(inst).makespan

    def test_budget(self):
        inst = Instance(Graph.path(4), ((0, 3),), d=1, ell=3)
        assert oracle_solve(inst, budget=2).outcome is Outcome.BUDGET
        assert oracle_solve(inst).makespan == 3


class TestConnectedSets:
    def test_small_counts(self):
        assert count_connected_sets(Graph.path(4), 0, 2) == 1
        assert count_connected_sets(Graph.path(4), 1, 3) == 2
        assert count_connected_sets(Graph.cycle(4), 0, 2) == 2
        assert count_connected_sets(Graph.complete(4), 0, 3) == 3
        assert count_connected_sets(Graph.star(3), 1, 3) == 2
        assert count_connected_sets(Graph.path(4), 0, 1) == 1

    def test_size_out_of_range(self):
        with pytest.raises(InvalidInstance):
            count_connected_sets(Graph.path(3), 0, 4)

    @pytest.mark.parametrize('size', [1, 2, 3, 4, 5])
    def test_grid_against_subsets(self, size):
        grid = Graph.grid(4, 4)
        nx_grid = grid.to_networkx()
        for v in (0, 5):
            others = [u for u in range(grid.n) if u != v]
            expected = sum(
                1
                for rest in itertools.combinations(others, size - 1)
                if nx.is_connected(nx_grid.subgraph((v,) + rest))
            )
            assert count_connected_sets(grid, v, size) == expected
