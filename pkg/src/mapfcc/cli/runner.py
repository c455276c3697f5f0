import logging
import sys
import time
from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path
from typing import Optional, Tuple

from .formats import format_instance, parse_instance_file, parse_mcc_file, parse_schedule_file
from .render import render_json_lines, render_plan, render_stats, write_dot_frames
from .strategies import choose_strategy, solve
from ..configurations import OUTPUT_FORMATS, STRATEGIES, Conf
from ..core import Instance, validate_schedule
from ..exceptions import ImproperlyConfigured, MapfccError
from ..expanded import (
    EdgeLabel,
    build_time_expanded,
    emit_mso_structure,
    treewidth_upper_bound,
    width_bound,
)
from ..reductions import audit_reduction, reduce_mcc
from ..search import Outcome

log = logging.getLogger("mapfcc.cli")

COMMAND_INPUTS = {"solve": 1, "validate": 2, "reduce": 1, "expand": 1, "bench": 0}
BENCH_SUITES = ("trees", "grids", "small", "mcc")


class ExitStatus(IntEnum):
    FEASIBLE = 0
    INFEASIBLE = 1
    BUDGET = 2
    INPUT_ERROR = 3
    DISAGREEMENT = 4


OUTCOME_STATUS = {
    Outcome.FEASIBLE: ExitStatus.FEASIBLE,
    Outcome.INFEASIBLE: ExitStatus.INFEASIBLE,
    Outcome.BUDGET: ExitStatus.BUDGET,
}


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a subcommand needs to run.

    Attributes:
        command:
            One of solve, validate, reduce, expand and bench.
        inputs:
            Input paths. validate takes an instance and a schedule, bench
            takes none and the other commands take one file.
        strategy:
            Solver used by solve. "auto" picks the tree solver on trees, the
            local solver when the reachable ball is smaller than the graph
            and BFS otherwise.
        budget:
            Node budget of the solver, or None for no budget.
        output_format:
            plan, json-lines or dot-frames.
        timing:
            Include wall-clock fields in the output.
        output_dir:
            Destination of dot frames and bench repro bundles.
        emit_mso:
            expand prints the msogi dump instead of a summary.
        suite, count, seed, csv:
            Bench matrix: suite name, instances per suite, base seed and
            whether to print the table as CSV.
    """

    command: str
    inputs: Tuple[str, ...] = ()
    strategy: str = "auto"
    budget: Optional[int] = None
    seed: int = 0
    output_format: str = "plan"
    timing: bool = True
    output_dir: Optional[str] = None
    emit_mso: bool = False
    suite: str = "trees"
    count: int = 20
    csv: bool = False

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(str(p) for p in self.inputs))
        if self.command not in COMMAND_INPUTS:
            raise ImproperlyConfigured(f"invalid command: {self.command}")
        expected = COMMAND_INPUTS[self.command]
        if len(self.inputs) != expected:
            raise ImproperlyConfigured(
                f"{self.command} expects {expected} input file(s), got {len(self.inputs)}"
            )
        if self.strategy not in STRATEGIES:
            raise ImproperlyConfigured(f"invalid strategy: {self.strategy}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ImproperlyConfigured(f"invalid output format: {self.output_format}")
        if self.budget is not None and self.budget < 1:
            raise ImproperlyConfigured("node budget must be positive")
        if self.output_format == "dot-frames" and self.command == "solve" and not self.output_dir:
            raise ImproperlyConfigured("dot-frames output requires an output directory")
        if self.suite not in BENCH_SUITES:
            raise ImproperlyConfigured(f"invalid bench suite: {self.suite}")
        if self.count < 0:
            raise ImproperlyConfigured("bench count must be non-negative")

    @classmethod
    def from_conf(cls, conf: Conf, command: str, **overrides) -> "RunConfig":
        """
        Build a run configuration from settings. Overrides that are None are
        ignored, so command line flags that were not given fall back to the
        settings.
        """
        settings = conf.load_settings()
        kwargs = {
            "strategy": settings["STRATEGY"],
            "budget": settings["NODE_BUDGET"] or None,
            "seed": settings["SEED"],
            "output_format": settings["OUTPUT_FORMAT"],
            "timing": settings["TIMING"],
        }
        kwargs.update((k, v) for k, v in overrides.items() if v is not None)
        return cls(command=command, **kwargs)


#
# Entry point
#
def run(cfg: RunConfig, out=None, err=None) -> int:
    """
    Execute a subcommand and return its exit status.

    Exit codes are 0 (feasible, valid or done), 1 (infeasible or invalid),
    2 (node budget exhausted), 3 (input error) and 4 (bench disagreement).
    """
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    handler = COMMANDS[cfg.command]
    try:
        return int(handler(cfg, out))
    except (MapfccError, OSError) as exc:
        log.debug("%s failed", cfg.command, exc_info=True)
        print(f"error: {exc}", file=err)
        return int(ExitStatus.INPUT_ERROR)


def read_instance(path) -> Instance:
    return parse_instance_file(Path(path).read_text())


#
# Subcommands
#
def run_solve(cfg: RunConfig, out) -> ExitStatus:
    inst = read_instance(cfg.inputs[0])
    strategy = choose_strategy(inst) if cfg.strategy == "auto" else cfg.strategy
    start = time.perf_counter()
    result = solve(inst, strategy, cfg.budget)
    wall_time = time.perf_counter() - start if cfg.timing else None

    if cfg.output_format == "json-lines":
        out.write(render_json_lines(result, strategy, wall_time))
    elif cfg.output_format == "dot-frames" and result.schedule is not None:
        for path in write_dot_frames(inst, result.schedule, cfg.output_dir):
            out.write(f"{path}\n")
        out.write(render_stats(result, strategy, wall_time))
    else:
        out.write(render_plan(result, strategy, wall_time))
    return OUTCOME_STATUS[result.outcome]


def run_validate(cfg: RunConfig, out) -> ExitStatus:
    inst = read_instance(cfg.inputs[0])
    sched = parse_schedule_file(Path(cfg.inputs[1]).read_text())
    report = validate_schedule(inst, sched)
    for warning in report.warnings:
        out.write(f"warning: {warning}\n")
    for violation in report.violations:
        out.write(f"{violation}\n")
    if not report.within_budget:
        out.write(f"makespan {report.makespan} exceeds ell={inst.ell}\n")
    if report.ok and report.within_budget:
        out.write(f"valid: makespan {report.makespan}\n")
        return ExitStatus.FEASIBLE
    out.write("invalid\n")
    return ExitStatus.INFEASIBLE


def run_reduce(cfg: RunConfig, out) -> ExitStatus:
    mcc = parse_mcc_file(Path(cfg.inputs[0]).read_text())
    inst, layout = reduce_mcc(mcc)
    audit = audit_reduction(inst, layout, mcc)
    out.write(format_instance(inst))
    out.write(f"# classes: {mcc.k}\n")
    out.write(f"# audit: {'ok' if audit.ok else 'failed'}\n")
    return ExitStatus.FEASIBLE


def run_expand(cfg: RunConfig, out) -> ExitStatus:
    inst = read_instance(cfg.inputs[0])
    gi = build_time_expanded(inst)
    if cfg.emit_mso:
        out.write(emit_mso_structure(gi, inst.d))
        return ExitStatus.FEASIBLE

    width, _ = treewidth_upper_bound(inst.graph)
    out.write(f"vertices {gi.num_vertices}\n")
    for label in EdgeLabel:
        out.write(f"{label.value} {gi.count(label)}\n")
    out.write(f"heuristic_width {width}\n")
    out.write(f"width_bound {width_bound(inst.ell, width)}\n")
    return ExitStatus.FEASIBLE


def run_bench_command(cfg: RunConfig, out) -> ExitStatus:
    from .bench import BenchMatrix, run_bench

    matrix = BenchMatrix(
        suite=cfg.suite,
        count=cfg.count,
        seed=cfg.seed,
        budget=cfg.budget if cfg.budget is not None else BenchMatrix.budget,
        timing=cfg.timing,
    )
    report = run_bench(matrix, output_dir=cfg.output_dir)
    out.write(report.to_csv() if cfg.csv else report.to_text())
    if not report.ok:
        out.write(f"# {report.disagreement}\n")
        out.write("".join(f"# {line}\n" for line in report.disagreement.bundle.splitlines()))
        return ExitStatus.DISAGREEMENT
    return ExitStatus.FEASIBLE


COMMANDS = {
    "solve": run_solve,
    "validate": run_validate,
    "reduce": run_reduce,
    "expand": run_expand,
    "bench": run_bench_command,
}
