import pytest

from mapfcc.core import Graph, Instance, Schedule, validate_schedule
from mapfcc.exceptions import InvalidSchedule, NotATree, PruneError
from mapfcc.search import Outcome, solve_bfs
from mapfcc.testing import tree_instances
from mapfcc.treeprune import (
    hub_component,
    project_schedule,
    prune,
    prune_once,
    relevant_neighbors,
    require_tree,
    solve_tree,
)

STAR_SCHEDULE = [(1, 3), (0, 3), (7, 3), (7, 0), (7, 4), (0, 4), (2, 4)]
PROJECTED = [(1, 3), (0, 3), (5, 3), (5, 0), (5, 4), (0, 4), (2, 4)]


class TestPruning:
    def test_relevant_neighbors_and_component(self, star7):
        tree = star7.graph
        relevant = relevant_neighbors(tree, star7, 0)
        assert relevant == {1, 2, 3, 4}
        assert hub_component(tree, 0, relevant) == {0, 5, 6, 7}

    def test_prune_once_keeps_k_neighbors(self, star7):
        pruned, step = prune_once(star7.graph, star7, 0)
        assert pruned.n == 7
        assert step.kept_neighbors == (5, 6)
        assert step.removed == {7}
        assert step.origin == tuple(range(7))
        assert pruned.degree(0) == 6

    def test_prune_once_requires_high_degree(self, star7):
        with pytest.raises(PruneError):
            prune_once(star7.graph, star7, 1)
        small = Instance(Graph.star(6), ((1, 2), (3, 4)), d=2, ell=6)
        with pytest.raises(PruneError):
            prune_once(small.graph, small, 0)

    def test_prune_reaches_degree_bound(self):
        inst = Instance(Graph.star(20), ((1, 2),), d=1, ell=2)
        pruned, trace = prune(inst.graph, inst)
        assert pruned.max_degree <= 3
        assert len(trace.steps) == 1
        assert trace.origin == (0, 1, 2, 3)
        assert trace.removed == set(range(4, 21))

    def test_prune_leaves_small_trees_alone(self):
        inst = Instance(Graph.path(6), ((0, 5),), d=1, ell=5)
        pruned, trace = prune(inst.graph, inst)
        assert pruned == inst.graph
        assert trace.steps == ()

    def test_require_tree(self):
        require_tree(Graph.path(3))
        with pytest.raises(NotATree):
            require_tree(Graph.cycle(3))
        with pytest.raises(NotATree):
            prune(Graph.cycle(4), Instance(Graph.cycle(4), ((0, 1),), 1, 1))


class TestProjectSchedule:
    def test_parks_agents_on_kept_neighbors(self, star7):
        tree = star7.graph
        sched = Schedule.from_positions(STAR_SCHEDULE)
        assert validate_schedule(star7, sched).ok

        pruned, step = prune_once(tree, star7, 0)
        projected = project_schedule(tree, star7, step, sched)
        assert projected == Schedule.from_positions(PROJECTED)

        pruned_inst = star7.translate(pruned, {v: v for v in range(pruned.n)})
        report = validate_schedule(pruned_inst, projected)
        assert report.ok and report.within_budget

    def test_rejects_wrong_agent_count(self, star7):
        _, step = prune_once(star7.graph, star7, 0)
        with pytest.raises(InvalidSchedule):
            project_schedule(star7.graph, star7, step, Schedule.from_positions([(1,)]))


class TestSolveTree:
    def test_star(self, star7):
        result = solve_tree(star7)
        assert result.outcome is Outcome.FEASIBLE
        assert result.makespan == 3
        assert validate_schedule(star7, result.schedule).ok

    def test_schedule_uses_original_ids(self):
        inst = Instance(Graph.star(20), ((1, 2),), d=1, ell=2)
        result = solve_tree(inst)
        assert result.schedule == Schedule.from_positions([(1,), (0,), (2,)])

    def test_rejects_non_trees(self, lanes):
        with pytest.raises(NotATree):
            solve_tree(lanes)

    def test_agrees_with_bfs_on_random_trees(self):
        for inst in tree_instances(30, seed=7, max_n=15, max_k=2):
            pruned, _ = prune(inst.graph, inst)
            assert pruned.max_degree <= 3 * inst.k
            expected = solve_bfs(inst)
            result = solve_tree(inst)
            assert result.outcome is expected.outcome
            assert result.makespan == expected.makespan
