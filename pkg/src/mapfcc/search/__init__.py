"""
Exact search over the configuration network and the brute-force reference
solver.
"""
from .keys import ConfigKey, config_key, decode_key
from .result import Outcome, SearchResult, SearchStats
from .successors import MoveGenerator, successors
from .connected_sets import count_connected_sets
from .bfs import solve_bfs
from .oracle import oracle_solve
