__version__ = "0.1.0"

from sidekick import import_later as _import_later

from .core import Configuration, Graph, Instance, Schedule, validate_schedule
from .exceptions import MapfccError
from .search import Outcome, SearchResult, oracle_solve, solve_bfs

treeprune = _import_later(".treeprune", package=__package__)
expanded = _import_later(".expanded", package=__package__)
reductions = _import_later(".reductions", package=__package__)
