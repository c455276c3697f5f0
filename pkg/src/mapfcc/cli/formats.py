"""
Text formats for instances, schedules and multicolored clique instances.

All formats are line based and whitespace insensitive. A ``#`` starts a
comment that runs to the end of the line; blank lines are ignored.

Instance::

    mapfcc 1
    graph <n> <m>        # or: grid <W> <H>
    <u> <v>              # m lines, omitted for grid
    agents <k>
    <start> <target>     # k lines
    d <int>
    ell <int>

Schedule::

    schedule 1
    agents <k>
    steps <s>
    <v_1> ... <v_k>      # s lines, the placements s_0 .. s_{s-1}

Multicolored clique::

    mcc <k>
    class <ids...>       # k lines
    edges <m>
    <u> <v>              # m lines
"""
from typing import Iterable, List, Optional, Tuple

from ..core import Graph, Instance, Schedule
from ..exceptions import InvalidInstance, ParseError
from ..reductions import MccInstance

INSTANCE_VERSION = 1
SCHEDULE_VERSION = 1


class _Lines:
    """
    Cursor over the significant lines of a text, keeping line numbers.
    """

    def __init__(self, text: str):
        self.items = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            tokens = raw.split("#", 1)[0].split()
            if tokens:
                self.items.append((lineno, tokens))
        self.pos = 0

    def next(self, expected: str) -> Tuple[int, List[str]]:
        if self.pos >= len(self.items):
            raise ParseError(f"unexpected end of input, expected {expected}")
        item = self.items[self.pos]
        self.pos += 1
        return item

    def keyword(self, word: str, arity: int) -> Tuple[int, List[int]]:
        """
        Read a line ``<word> <int> ... <int>`` with exactly ``arity`` integers.
        """
        lineno, tokens = self.next(f"'{word}'")
        if tokens[0] != word:
            raise ParseError(f"expected '{word}', got '{tokens[0]}'", lineno)
        return lineno, self.integers(lineno, tokens[1:], arity, word)

    def row(self, expected: str, arity: Optional[int] = None) -> Tuple[int, List[int]]:
        lineno, tokens = self.next(expected)
        return lineno, self.integers(lineno, tokens, arity, expected)

    def integers(self, lineno, tokens, arity, what) -> List[int]:
        if arity is not None and len(tokens) != arity:
            raise ParseError(f"{what}: expected {arity} values, got {len(tokens)}", lineno)
        try:
            values = [int(tok) for tok in tokens]
        except ValueError as exc:
            raise ParseError(f"{what}: not an integer ({exc})", lineno) from None
        if any(v < 0 for v in values):
            raise ParseError(f"{what}: values must be non-negative", lineno)
        return values

    def finish(self):
        if self.pos < len(self.items):
            lineno, tokens = self.items[self.pos]
            raise ParseError(f"unexpected trailing content '{tokens[0]}'", lineno)


def _header(lines: _Lines, word: str, version: int):
    lineno, (found,) = lines.keyword(word, 1)
    if found != version:
        raise ParseError(f"unsupported {word} format version {found}", lineno)


#
# Instances
#
def parse_instance_file(text: str) -> Instance:
    """
    Parse an instance.

    Raises:
        ParseError:
            With the 1-based line number of the offending line. Duplicate
            edges, self-loops, duplicate starts and duplicate targets are
            reported by name.
    """
    lines = _Lines(text)
    _header(lines, "mapfcc", INSTANCE_VERSION)

    lineno, tokens = lines.next("'graph' or 'grid'")
    if tokens[0] == "grid":
        width, height = lines.integers(lineno, tokens[1:], 2, "grid")
        graph = Graph.grid(width, height)
    elif tokens[0] == "graph":
        n, m = lines.integers(lineno, tokens[1:], 2, "graph")
        graph = _parse_edges(lines, n, m)
    else:
        raise ParseError(f"expected 'graph' or 'grid', got '{tokens[0]}'", lineno)

    lineno, (k,) = lines.keyword("agents", 1)
    if k < 1:
        raise ParseError("an instance needs at least one agent", lineno)
    agents = []
    starts, targets = set(), set()
    for _ in range(k):
        lineno, (s, t) = lines.row("agent 'start target'", 2)
        if s >= graph.n or t >= graph.n:
            raise ParseError(f"agent {s}->{t} uses a vertex out of range", lineno)
        if s in starts:
            raise ParseError(f"duplicate start {s}", lineno)
        if t in targets:
            raise ParseError(f"duplicate target {t}", lineno)
        starts.add(s)
        targets.add(t)
        agents.append((s, t))

    lineno, (d,) = lines.keyword("d", 1)
    if d < 1:
        raise ParseError("communication range d must be at least 1", lineno)
    _, (ell,) = lines.keyword("ell", 1)
    lines.finish()
    return Instance(graph, tuple(agents), d=d, ell=ell)


def _parse_edges(lines: _Lines, n: int, m: int) -> Graph:
    seen = set()
    edges = []
    for _ in range(m):
        lineno, (u, v) = lines.row("edge 'u v'", 2)
        if u >= n or v >= n:
            raise ParseError(f"edge {u}-{v} out of range for n={n}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u}-{v}", lineno)
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def format_instance(inst: Instance) -> str:
    """
    Render an instance. The graph is always written as an explicit edge list.
    """
    graph = inst.graph
    edges = list(graph.edges())
    out = [f"mapfcc {INSTANCE_VERSION}", f"graph {graph.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    out.append(f"agents {inst.k}")
    out.extend(f"{s} {t}" for s, t in inst.agents)
    out.append(f"d {inst.d}")
    out.append(f"ell {inst.ell}")
    return "\n".join(out) + "\n"


#
# Schedules
#
def parse_schedule_file(text: str) -> Schedule:
    lines = _Lines(text)
    _header(lines, "schedule", SCHEDULE_VERSION)
    _, (k,) = lines.keyword("agents", 1)
    lineno, (steps,) = lines.keyword("steps", 1)
    if steps < 1:
        raise ParseError("a schedule needs at least the initial placement", lineno)
    rows = [lines.row("placement", k)[1] for _ in range(steps)]
    lines.finish()
    return Schedule.from_positions(rows)


def format_schedule(sched: Schedule, comments: Iterable[Tuple[str, object]] = ()) -> str:
    """
    Render a schedule, followed by ``# key: value`` comment lines.
    """
    out = [
        f"schedule {SCHEDULE_VERSION}",
        f"agents {sched.k}",
        f"steps {len(sched)}",
    ]
    out.extend(" ".join(map(str, step)) for step in sched)
    out.extend(f"# {key}: {value}" for key, value in comments)
    return "\n".join(out) + "\n"


#
# Multicolored clique
#
def parse_mcc_file(text: str) -> MccInstance:
    lines = _Lines(text)
    _, (k,) = lines.keyword("mcc", 1)
    classes = []
    for _ in range(k):
        lineno, tokens = lines.next("'class'")
        if tokens[0] != "class":
            raise ParseError(f"expected 'class', got '{tokens[0]}'", lineno)
        classes.append(tuple(lines.integers(lineno, tokens[1:], None, "class")))
    n = sum(len(c) for c in classes)

    lineno, (m,) = lines.keyword("edges", 1)
    graph = _parse_edges(lines, n, m)
    lines.finish()
    try:
        return MccInstance(graph, tuple(classes))
    except InvalidInstance as exc:
        raise ParseError(str(exc)) from None


def format_mcc(mcc: MccInstance) -> str:
    edges = list(mcc.graph.edges())
    out = [f"mcc {mcc.k}"]
    out.extend(" ".join(["class", *map(str, c)]) for c in mcc.classes)
    out.append(f"edges {len(edges)}")
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"
