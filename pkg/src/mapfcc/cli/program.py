"""
The ``mapfcc`` command line program.

Every subcommand reads its defaults from :class:`MapfccConf` (environment
variables with the MAPFCC_ prefix); flags override them.
"""
import sys

from invoke import Collection, Program, task
from invoke.exceptions import Exit

from .runner import RunConfig, run
from .. import __version__
from ..configurations import MapfccConf, configure_logging
from ..exceptions import ImproperlyConfigured

COMMON_HELP = {
    "budget": "Node budget of the solver (default: MAPFCC_NODE_BUDGET, 0 = none).",
    "timing": "Include wall-clock fields in the output.",
    "no_timing": "Omit wall-clock fields, for byte-identical output.",
    "verbose": "Log solver diagnostics to stderr.",
}


def execute(command, inputs=(), verbose=False, **overrides):
    """
    Build the run configuration, run the command and exit with its status.
    """
    try:
        conf = MapfccConf()
        configure_logging(conf, verbose)
        cfg = RunConfig.from_conf(conf, command, inputs=tuple(inputs), **overrides)
    except (ImproperlyConfigured, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise Exit(code=3)
    status = run(cfg)
    if status:
        raise Exit(code=status)


def _timing(timing, no_timing):
    if no_timing:
        return False
    return True if timing else None


def _int(value):
    return None if value is None else int(value)


@task(
    positional=["instance"],
    help={
        "instance": "Instance file.",
        "strategy": "auto, bfs, tree, expanded, local or oracle.",
        "format": "Output format: plan, json-lines or dot-frames.",
        "output_dir": "Directory that receives dot frames.",
        **COMMON_HELP,
    },
)
def solve(
    ctx,
    instance,
    strategy=None,
    budget=None,
    format=None,
    output_dir=None,
    timing=False,
    no_timing=False,
    verbose=False,
):
    """
    Solve an instance and print a validated schedule.
    """
    execute(
        "solve",
        [instance],
        verbose,
        strategy=strategy,
        budget=_int(budget),
        output_format=format,
        output_dir=output_dir,
        timing=_timing(timing, no_timing),
    )


@task(positional=["instance", "schedule"], help={"verbose": COMMON_HELP["verbose"]})
def validate(ctx, instance, schedule, verbose=False):
    """
    Check a schedule file against an instance file.
    """
    execute("validate", [instance, schedule], verbose)


@task(positional=["mcc"], help={"verbose": COMMON_HELP["verbose"]})
def reduce(ctx, mcc, verbose=False):
    """
    Reduce a multicolored clique instance to a MAPFCC instance.
    """
    execute("reduce", [mcc], verbose)


@task(
    positional=["instance"],
    help={"emit_mso": "Print the labeled graph and the logical sentence instead of a summary.", "verbose": COMMON_HELP["verbose"]},
)
def expand(ctx, instance, emit_mso=False, verbose=False):
    """
    Build the time-expanded graph of an instance.
    """
    execute("expand", [instance], verbose, emit_mso=emit_mso)


@task(
    help={
        "suite": "trees, grids, small or mcc.",
        "count": "Number of instances.",
        "seed": "Base seed (default: MAPFCC_SEED).",
        "csv": "Print the table as CSV.",
        "output_dir": "Directory that receives repro files on disagreement.",
        **COMMON_HELP,
    }
)
def bench(
    ctx,
    suite="trees",
    count=20,
    seed=None,
    budget=None,
    csv=False,
    output_dir=None,
    timing=False,
    no_timing=False,
    verbose=False,
):
    """
    Run all strategies of a suite side by side; exit 4 if they disagree.
    """
    execute(
        "bench",
        (),
        verbose,
        suite=suite,
        count=int(count),
        seed=_int(seed),
        budget=_int(budget),
        csv=csv,
        output_dir=output_dir,
        timing=_timing(timing, no_timing),
    )


namespace = Collection(solve, validate, reduce, expand, bench)
program = Program(namespace=namespace, version=__version__, name="mapfcc", binary="mapfcc")
