"""
Seeded cross-checks of the solvers against each other and against the
exhaustive oracle.
"""
import random

import pytest

from mapfcc.core import Graph, Instance, is_d_connected, validate_schedule
from mapfcc.expanded import (
    build_time_expanded,
    check_decomposition,
    check_properties,
    lift_tree_decomposition,
    paths_to_schedule,
    schedule_to_paths,
    solve_disjoint_paths,
    solve_local,
    treewidth_upper_bound,
    width_bound,
)
from mapfcc.reductions import brute_clique, reduce_mcc
from mapfcc.search import Outcome, oracle_solve, solve_bfs
from mapfcc.testing import (
    all_mcc,
    grid_instances,
    placements,
    small_connected_graphs,
    tree_instances,
)
from mapfcc.treeprune import prune, solve_tree

BUDGET = 200_000


def decisions(*results):
    return {(r.outcome, r.makespan) for r in results if r.outcome is not Outcome.BUDGET}


def check_schedule(inst, result):
    if result.schedule is not None:
        report = validate_schedule(inst, result.schedule)
        assert report.ok and report.within_budget


def has_witness(inst):
    # agents that never move may start apart; such schedules have no
    # disjoint paths with d-connected layers
    return is_d_connected(inst.graph, inst.d, inst.starts)


def check_round_trip(inst, sched):
    if not has_witness(inst):
        return
    gi = build_time_expanded(inst)
    w = schedule_to_paths(gi, sched)
    assert paths_to_schedule(gi, w) == sched.padded(inst.ell)
    if inst.ell > 0:
        S, X = w.edge_set(gi), w.layer_sets(gi)
        assert check_properties(gi, S, X, inst.d).failing() == []


def check_lift(inst, sched):
    if not has_witness(inst):
        return
    gi = build_time_expanded(inst)
    width, td = treewidth_upper_bound(inst.graph)
    lifted = lift_tree_decomposition(td, gi, schedule_to_paths(gi, sched))
    check_decomposition(lifted, gi)
    assert lifted.width <= width_bound(inst.ell, width)


class TestSmallGraphs:
    @pytest.mark.parametrize('d', [1, 2])
    def test_bfs_matches_oracle(self, d):
        rng = random.Random(d)
        for graph in small_connected_graphs(4):
            for k in (1, 2):
                if k > graph.n:
                    continue
                for agents in placements(graph, k, cap=4, rng=rng):
                    for ell in range(5):
                        inst = Instance(graph, agents, d=d, ell=ell)
                        bfs = solve_bfs(inst)
                        oracle = oracle_solve(inst, budget=BUDGET)
                        check_schedule(inst, bfs)
                        check_schedule(inst, oracle)
                        assert len(decisions(bfs, oracle)) == 1, inst
                        if bfs.is_feasible:
                            check_round_trip(inst, bfs.schedule)
                            check_lift(inst, bfs.schedule)

    @pytest.mark.slow
    @pytest.mark.parametrize('d', [1, 2])
    def test_all_solvers_up_to_five_vertices(self, d):
        # Every solver returns a minimum makespan, so ell = 4 settles all
        # budgets ell <= 4 at once
        rng = random.Random(d)
        for graph in small_connected_graphs(5):
            for k in (1, 2):
                if k > graph.n:
                    continue
                for agents in placements(graph, k, cap=200, rng=rng):
                    inst = Instance(graph, agents, d=d, ell=4)
                    bfs = solve_bfs(inst, budget=BUDGET)
                    paths = solve_disjoint_paths(inst, budget=BUDGET)
                    oracle = oracle_solve(inst, budget=BUDGET)
                    check_schedule(inst, bfs)
                    check_schedule(inst, oracle)
                    assert len(decisions(bfs, paths, oracle)) == 1, inst
                    if bfs.is_feasible:
                        check_round_trip(inst, bfs.schedule)
                        check_lift(inst, bfs.schedule)


class TestTrees:
    def test_pruned_solver(self):
        for inst in tree_instances(15, seed=11, max_n=20, max_k=2):
            tree = solve_tree(inst, budget=BUDGET)
            bfs = solve_bfs(inst, budget=BUDGET)
            check_schedule(inst, tree)
            assert len(decisions(tree, bfs)) <= 1, inst

    @pytest.mark.slow
    def test_against_oracle(self):
        for inst in tree_instances(300, seed=12, max_n=40, max_k=3, max_d=2, max_ell=6):
            pruned, _ = prune(inst.graph, inst)
            assert pruned.max_degree <= 3 * inst.k
            tree = solve_tree(inst, budget=BUDGET)
            oracle = oracle_solve(inst, budget=BUDGET)
            check_schedule(inst, tree)
            assert len(decisions(tree, oracle)) <= 1, inst
            if tree.is_feasible:
                check_round_trip(inst, tree.schedule)


class TestGrids:
    @pytest.mark.slow
    def test_local_and_expanded(self):
        for inst in grid_instances(20, seed=13, max_k=2):
            bfs = solve_bfs(inst, budget=BUDGET)
            local = solve_local(inst, budget=BUDGET)
            paths = solve_disjoint_paths(inst, budget=BUDGET)
            check_schedule(inst, local)
            assert len(decisions(bfs, local, paths)) <= 1, inst

    def test_swap_needs_room(self):
        inst = Instance(Graph.star(3), ((1, 0), (0, 1)), d=1, ell=6)
        assert solve_bfs(inst).makespan == 3
        cramped = Instance(Graph.path(2), ((0, 1), (1, 0)), d=1, ell=6)
        assert solve_bfs(cramped).outcome is Outcome.INFEASIBLE


class TestReduction:
    def test_small_classes(self):
        for mcc in all_mcc((2, 1), cap=8):
            inst, _ = reduce_mcc(mcc)
            feasible = solve_bfs(inst).outcome is Outcome.FEASIBLE
            assert feasible == (brute_clique(mcc) is not None)
