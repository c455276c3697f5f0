"""
Exceptions raised by mapfcc.

Solvers never raise to signal "no solution" or an exhausted node budget: those
are outcomes (see :class:`mapfcc.search.Outcome`). Exceptions are reserved for
malformed input and misuse.
"""


class MapfccError(Exception):
    """
    Base class for all errors raised by mapfcc.
    """


class ImproperlyConfigured(MapfccError):
    """
    Settings or run configuration are inconsistent.
    """


class InvalidInstance(MapfccError, ValueError):
    """
    A graph, instance or MCC instance violates its invariants.
    """


class ParseError(InvalidInstance):
    """
    Input file could not be parsed.

    Attributes:
        line:
            1-based line number of the offending line, or None when the error
            is not attached to a single line (e.g., a premature end of file).
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidSchedule(MapfccError, ValueError):
    """
    A schedule is malformed (e.g., wrong agent count) or infeasible where a
    feasible one was required.
    """


class InvalidWitness(MapfccError, ValueError):
    """
    A set of paths in the time-expanded graph fails one of the conditions that
    characterize yes-instances.

    Attributes:
        condition:
            The number of the failing condition (1 to 4) or the string
            "disjoint" when the paths share a vertex.
    """

    def __init__(self, condition, message):
        self.condition = condition
        prefix = f"condition {condition}" if condition != "disjoint" else "disjoint"
        super().__init__(f"{prefix}: {message}")


class InvalidDecomposition(MapfccError, ValueError):
    """
    A tree decomposition does not cover all edges or breaks the connected
    subtree property.
    """


class NotATree(InvalidInstance):
    """
    A tree-only operation received a graph that is not a tree.
    """


class PruneError(MapfccError, ValueError):
    """
    Tree pruning was requested on a vertex that does not need it.
    """
