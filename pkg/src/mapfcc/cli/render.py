"""
Output renderers of the solve command: ``plan``, ``json-lines`` and
``dot-frames``.
"""
import json
from pathlib import Path
from typing import List, Optional, Tuple

from .formats import format_schedule
from ..core import Instance, Schedule
from ..search import SearchResult


def stats_items(
    result: SearchResult, strategy: str, wall_time: Optional[float] = None
) -> List[Tuple[str, object]]:
    """
    Ordered (key, value) pairs describing a solver run. The wall time is
    omitted when None.
    """
    items = [
        ("outcome", result.outcome.value),
        ("strategy", strategy),
        ("makespan", result.makespan),
    ]
    stats = result.stats.as_dict()
    items.extend((key, value) for key, value in stats.items() if value is not None)
    if wall_time is not None:
        items.append(("wall_time", round(wall_time, 6)))
    return items


def render_plan(result: SearchResult, strategy: str, wall_time: Optional[float] = None) -> str:
    """
    The schedule in the schedule file format followed by ``#`` stats lines.
    Without a schedule, only the stats lines.
    """
    if result.schedule is not None:
        return format_schedule(result.schedule, stats_items(result, strategy, wall_time))
    return render_stats(result, strategy, wall_time)


def render_stats(result: SearchResult, strategy: str, wall_time: Optional[float] = None) -> str:
    items = stats_items(result, strategy, wall_time)
    return "".join(f"# {key}: {value}\n" for key, value in items)


def render_json_lines(
    result: SearchResult, strategy: str, wall_time: Optional[float] = None
) -> str:
    """
    One JSON record per turn and a final stats record.
    """
    records = []
    if result.schedule is not None:
        for turn, step in enumerate(result.schedule):
            records.append({"type": "turn", "turn": turn, "positions": list(step)})
    records.append({"type": "stats", **dict(stats_items(result, strategy, wall_time))})
    return "".join(json.dumps(record, sort_keys=True) + "\n" for record in records)


def dot_frame(inst: Instance, sched: Schedule, turn: int) -> str:
    """
    Graphviz drawing of the placement at the given turn. Occupied vertices
    are filled and labelled with their agent; targets are double circles.
    """
    occupant = {v: agent for agent, v in enumerate(sched[turn])}
    targets = set(inst.targets)
    lines = [f"graph turn_{turn} {{", f'  label="turn {turn}";']
    for v in inst.graph.vertex_ids():
        attrs = []
        if v in occupant:
            attrs += [f'label="{v}\\na{occupant[v]}"', "style=filled"]
        if v in targets:
            attrs.append("shape=doublecircle")
        lines.append(f"  {v} [{', '.join(attrs)}];" if attrs else f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in inst.graph.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot_frames(inst: Instance, sched: Schedule, directory) -> List[Path]:
    """
    Write ``turn_000.dot``, ``turn_001.dot``, ... into directory.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    width = max(3, len(str(sched.makespan)))
    paths = []
    for turn in range(len(sched)):
        path = directory / f"turn_{turn:0{width}d}.dot"
        path.write_text(dot_frame(inst, sched, turn))
        paths.append(path)
    return paths
