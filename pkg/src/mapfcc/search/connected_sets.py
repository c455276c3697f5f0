from ..core import Graph
from ..exceptions import InvalidInstance


def count_connected_sets(g: Graph, u: int, size: int) -> int:
    """
    Count vertex sets U with ``|U| = size`` and ``u in U`` that induce a
    connected subgraph of g.

    Sets are grown from {u} by branching on one candidate vertex at a time:
    either it joins the set or it is banned for the rest of the branch. The
    candidates are always the neighbors of the current set that are neither
    members nor banned, so every set is produced exactly once.
    """
    if not 1 <= size <= g.n:
        raise InvalidInstance(f"size must be between 1 and {g.n}")
    if not 0 <= u < g.n:
        raise InvalidInstance(f"vertex {u} out of range")

    members = {u}
    count = 0

    def grow(candidates, banned):
        nonlocal count
        if len(members) == size:
            count += 1
            return
        candidates = set(candidates)
        banned = set(banned)
        while candidates:
            v = min(candidates)
            candidates.discard(v)
            members.add(v)
            extension = {
                w for w in g.adjacency[v] if w not in members and w not in banned
            }
            grow(candidates | extension, banned)
            members.discard(v)
            banned.add(v)

    grow(set(g.adjacency[u]), set())
    return count
