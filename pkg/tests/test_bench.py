import io

import pytest

from mapfcc.cli import RunConfig, parse_instance_file, run
from mapfcc.cli import bench
from mapfcc.cli.bench import BenchMatrix, run_bench, suite_instances
from mapfcc.core import Instance
from mapfcc.reductions import MccInstance
from mapfcc.search import Outcome, SearchResult


def execute(**kwargs):
    out, err = io.StringIO(), io.StringIO()
    status = run(RunConfig('bench', **kwargs), out, err)
    return status, out.getvalue()


class TestMatrix:
    def test_columns(self):
        matrix = BenchMatrix('trees', timing=False)
        assert matrix.columns()[:7] == ['instance', 'seed', 'n', 'm', 'k', 'd', 'ell']
        assert matrix.columns()[7:10] == ['tree_decision', 'tree_makespan', 'tree_nodes']
        assert 'oracle_time' in BenchMatrix('trees').columns()

    @pytest.mark.parametrize('suite, kind', [
        ('trees', Instance),
        ('grids', Instance),
        ('small', Instance),
        ('mcc', MccInstance),
    ])
    def test_suites_are_seeded(self, suite, kind):
        matrix = BenchMatrix(suite, count=4, seed=10)
        first = list(suite_instances(matrix))
        assert [seed for seed, _ in first] == [10, 11, 12, 13]
        assert all(isinstance(item, kind) for _, item in first)
        assert first == list(suite_instances(matrix))


class TestRunBench:
    def test_empty_matrix(self):
        status, out = execute(suite='small', count=0)
        assert status == 0
        assert out.startswith('instance seed n m k d ell bfs_decision')

    @pytest.mark.parametrize('suite, count', [('trees', 3), ('small', 8)])
    def test_strategies_agree(self, suite, count):
        report = run_bench(BenchMatrix(suite, count=count, seed=1, budget=20_000, timing=False))
        assert report.ok
        assert len(report.table) == count

    def test_mcc_suite(self):
        report = run_bench(BenchMatrix('mcc', count=3, seed=2, budget=20_000, timing=False))
        assert report.ok
        assert set(report.table['ell']) == {3}

    def test_output_is_deterministic(self):
        first = execute(suite='small', count=5, seed=3, timing=False)
        assert first == execute(suite='small', count=5, seed=3, timing=False)
        assert first[0] == 0

    def test_csv(self):
        status, out = execute(suite='small', count=2, timing=False, csv=True)
        assert status == 0
        assert out.splitlines()[0].startswith('instance,seed,n,m,k,d,ell,')
        assert len(out.splitlines()) == 3

    def test_disagreement(self, monkeypatch, tmp_path):
        def biased(inst, strategy, budget=None):
            outcome = Outcome.FEASIBLE if strategy == 'bfs' else Outcome.INFEASIBLE
            return SearchResult(outcome, None)

        monkeypatch.setattr(bench, 'solve', biased)
        status, out = execute(suite='small', count=3, seed=5, output_dir=str(tmp_path))
        assert status == 4
        assert '# strategies disagree on instance 0' in out
        repro = tmp_path / 'repro-small-5.mapfcc'
        assert isinstance(parse_instance_file(repro.read_text()), Instance)
        assert '# mapfcc 1\n' in out

    def test_budget_cells_do_not_disagree(self, monkeypatch):
        def budgeted(inst, strategy, budget=None):
            if strategy == 'bfs':
                return SearchResult(Outcome.BUDGET, None)
            return SearchResult(Outcome.INFEASIBLE, None)

        monkeypatch.setattr(bench, 'solve', budgeted)
        assert run_bench(BenchMatrix('small', count=2, timing=False)).ok
