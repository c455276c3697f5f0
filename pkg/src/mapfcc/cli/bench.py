"""
Head-to-head comparison of the solvers over seeded instance suites.

Every row is one instance; every strategy contributes a decision, a makespan,
a node count and (optionally) a wall time. All strategies must agree: the
run stops at the first instance where two decisions or two makespans differ.
"""
import functools
import logging
import random
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

from sidekick import import_later

from .formats import format_instance, format_mcc
from .strategies import solve
from ..core import Instance
from ..reductions import MccInstance, brute_clique, reduce_mcc
from ..search import Outcome
from .. import testing

pd = import_later("pandas")
log = logging.getLogger("mapfcc.bench")

SUITE_STRATEGIES = {
    "trees": ("tree", "bfs", "oracle"),
    "grids": ("bfs", "local", "expanded", "oracle"),
    "small": ("bfs", "expanded", "oracle"),
    "mcc": ("clique", "bfs"),
}


@dataclass(frozen=True)
class BenchMatrix:
    """
    Attributes:
        suite:
            One of trees, grids, small and mcc.
        count:
            Number of instances.
        seed:
            Base seed of the instance generator.
        budget:
            Node budget of every solver run. Cells that exhaust it are
            reported as "budget" and do not take part in the agreement check.
        timing:
            Add a wall time column per strategy.
    """

    suite: str
    count: int = 20
    seed: int = 0
    budget: Optional[int] = 200_000
    timing: bool = True

    @property
    def strategies(self) -> Tuple[str, ...]:
        return SUITE_STRATEGIES[self.suite]

    def columns(self) -> List[str]:
        columns = ["instance", "seed", "n", "m", "k", "d", "ell"]
        for strategy in self.strategies:
            columns += [f"{strategy}_decision", f"{strategy}_makespan", f"{strategy}_nodes"]
            if self.timing:
                columns.append(f"{strategy}_time")
        return columns


@dataclass
class Disagreement:
    """
    A counterexample: the instance that split the strategies and the row of
    results.
    """

    index: int
    bundle: str
    row: dict = field(default_factory=dict)

    def __str__(self):
        decisions = {
            key: value for key, value in self.row.items() if key.endswith(("_decision", "_makespan"))
        }
        return f"strategies disagree on instance {self.index}: {decisions}"


@dataclass
class BenchReport:
    table: "pd.DataFrame"
    disagreement: Optional[Disagreement] = None

    @property
    def ok(self) -> bool:
        return self.disagreement is None

    def to_text(self) -> str:
        if self.table.empty:
            return " ".join(self.table.columns) + "\n"
        return self.table.to_string(index=False) + "\n"

    def to_csv(self) -> str:
        return self.table.to_csv(index=False)


#
# Suites
#
def suite_instances(matrix: BenchMatrix) -> Iterator[Tuple[int, object]]:
    """
    Yield (seed, instance) pairs. Instances are MAPFCC instances except for
    the mcc suite, which yields multicolored clique instances.
    """
    for index in range(matrix.count):
        seed = matrix.seed + index
        rng = random.Random(seed)
        if matrix.suite == "trees":
            (inst,) = testing.tree_instances(1, seed)
        elif matrix.suite == "grids":
            (inst,) = testing.grid_instances(1, seed)
        elif matrix.suite == "small":
            inst = _small_instance(rng)
        elif matrix.suite == "mcc":
            inst = testing.random_mcc(3, rng.randint(1, 3), 0.5, rng)
        else:
            raise ValueError(f"invalid suite: {matrix.suite}")
        yield seed, inst


def _small_instance(rng: random.Random) -> Instance:
    g = rng.choice(_small_graphs())
    k = rng.randint(1, min(2, g.n))
    d = rng.randint(1, 2)
    ell = rng.randint(0, 4)
    return testing.random_instance(g, k, d, ell, rng)


@functools.lru_cache(maxsize=None)
def _small_graphs():
    return testing.small_connected_graphs(5)


#
# Running
#
def run_bench(matrix: BenchMatrix, output_dir=None) -> BenchReport:
    """
    Run every strategy of the suite on every instance of the matrix.

    On a disagreement the run stops; the offending instance is serialized in
    the report and, if output_dir is given, written there as a repro file.
    """
    rows = []
    for index, (seed, item) in enumerate(suite_instances(matrix)):
        row, cells = _bench_row(matrix, index, seed, item)
        rows.append(row)
        if not _agree(cells):
            bundle = format_mcc(item) if isinstance(item, MccInstance) else format_instance(item)
            disagreement = Disagreement(index, bundle, row)
            log.error("%s", disagreement)
            if output_dir is not None:
                _write_repro(output_dir, matrix, seed, bundle)
            return BenchReport(pd.DataFrame(rows, columns=matrix.columns()), disagreement)
    return BenchReport(pd.DataFrame(rows, columns=matrix.columns()))


def _bench_row(matrix: BenchMatrix, index: int, seed: int, item) -> Tuple[dict, list]:
    if isinstance(item, MccInstance):
        inst, _ = reduce_mcc(item)
    else:
        inst = item
    row = {
        "instance": index,
        "seed": seed,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "k": inst.k,
        "d": inst.d,
        "ell": inst.ell,
    }
    cells = []
    for strategy in matrix.strategies:
        start = time.perf_counter()
        if strategy == "clique":
            clique = brute_clique(item)
            outcome = Outcome.FEASIBLE if clique is not None else Outcome.INFEASIBLE
            makespan = inst.ell if clique is not None else None
            nodes = 0
        else:
            result = solve(inst, strategy, matrix.budget)
            outcome, makespan = result.outcome, result.makespan
            nodes = result.stats.expanded_nodes
        elapsed = time.perf_counter() - start

        row[f"{strategy}_decision"] = outcome.value
        row[f"{strategy}_makespan"] = -1 if makespan is None else makespan
        row[f"{strategy}_nodes"] = nodes
        if matrix.timing:
            row[f"{strategy}_time"] = round(elapsed, 6)
        cells.append((outcome, makespan))
    return row, cells


def _agree(cells) -> bool:
    decided = [(outcome, makespan) for outcome, makespan in cells if outcome is not Outcome.BUDGET]
    return len(set(decided)) <= 1


def _write_repro(output_dir, matrix: BenchMatrix, seed: int, bundle: str) -> Path:
    directory = Path(output_dir)
    directory.mkdir(parents=True, exist_ok=True)
    suffix = "mcc" if matrix.suite == "mcc" else "mapfcc"
    path = directory / f"repro-{matrix.suite}-{seed}.{suffix}"
    path.write_text(bundle)
    return path
