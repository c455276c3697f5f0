"""
Command line surface: file formats, strategy selection, output renderers and
the bench harness.
"""
from .formats import (
    format_instance,
    format_mcc,
    format_schedule,
    parse_instance_file,
    parse_mcc_file,
    parse_schedule_file,
)
from .render import dot_frame, render_json_lines, render_plan, render_stats, write_dot_frames
from .strategies import SOLVERS, choose_strategy, solve
from .runner import ExitStatus, RunConfig, run
