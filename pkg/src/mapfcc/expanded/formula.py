"""
The monadic second order sentence over the time-expanded graph.

This module has two faces. :func:`evaluate_formula` decides the sentence's
body for a concrete assignment of S and X_0, ..., X_ell by evaluating each
sub-formula through its quantifiers. :func:`mso_definitions` and
:func:`mso_sentence` build the same formulas as syntax trees that
:mod:`mapfcc.expanded.mso` renders for external model checkers.
"""
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import AbstractSet, List, Optional, Sequence, Tuple, Union

from .time_expanded import EdgeLabel, LabeledEdge, TimeExpandedGraph
from ..core import UnionFind

FORMULA_NAMES = tuple(f"phi_{i}" for i in range(1, 9))


#
# Predicates
#
def incident_edges(v: int, F: AbstractSet[LabeledEdge]) -> List[LabeledEdge]:
    return [e for e in F if v in (e.u, e.v)]


def deg_0(v, F) -> bool:
    return not any(v in (e.u, e.v) for e in F)


def deg_1(v, F) -> bool:
    for e in F:
        if v in (e.u, e.v) and all(f == e for f in F if v in (f.u, f.v)):
            return True
    return False


def deg_2(v, F) -> bool:
    inc = incident_edges(v, F)
    for e1 in inc:
        for e2 in inc:
            if e1 != e2 and all(f in (e1, e2) for f in inc):
                return True
    return False


def joins(e: LabeledEdge, u: int, v: int) -> bool:
    """
    Shorthand ``e = uv``: e is incident to both u and v, with u != v.
    """
    return u != v and {u, v} == {e.u, e.v}


def dist_k(gi: TimeExpandedGraph, u: int, v: int, k: int) -> bool:
    """
    True if v is at most k communication edges away from u.
    """
    if u == v:
        return True
    adjacency = gi.communication_adjacency
    seen = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if seen[x] == k:
            continue
        for y in adjacency[x]:
            if y == v:
                return True
            if y not in seen:
                seen[y] = seen[x] + 1
                queue.append(y)
    return False


def dist_k_unrolled(gi: TimeExpandedGraph, u: int, v: int, k: int) -> bool:
    """
    Inductive definition of :func:`dist_k`, evaluated as written:
    dist_0(u, v) iff u = v, and dist_k(u, v) iff dist_{k-1}(u, v) or some
    communication edge joins a vertex w with dist_{k-1}(u, w) to v.
    """
    communication = gi.edges_with(EdgeLabel.COMMUNICATION)

    @lru_cache(maxsize=None)
    def holds(j, x, y):
        if j == 0:
            return x == y
        if holds(j - 1, x, y):
            return True
        return any(
            holds(j - 1, x, w)
            for e in communication
            if y in (e.u, e.v)
            for w in (e.u, e.v)
            if joins(e, w, y)
        )

    return holds(k, u, v)


def connected_k(gi: TimeExpandedGraph, X: AbstractSet[int], k: int) -> bool:
    """
    True unless X splits into non-empty parts A and B with every pair across
    farther than k communication edges. The empty set is connected.
    """
    members = sorted(X)
    uf = UnionFind(members)
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if dist_k(gi, u, v, k):
                uf.union(u, v)
    return uf.count() <= 1


#
# Evaluation
#
def evaluate_formula(
    gi: TimeExpandedGraph,
    S: AbstractSet[LabeledEdge],
    X: Sequence[AbstractSet[int]],
    d: int,
) -> Tuple[bool, Optional[str]]:
    """
    Evaluate phi_1, ..., phi_8 for the given assignment.

    Returns:
        A pair (ok, name) where ``name`` is the first failing sub-formula
        ("phi_1" to "phi_8") or None when all of them hold.
    """
    S = frozenset(S)
    checks = (
        _phi_1,
        _phi_2,
        _phi_3,
        _phi_4,
        _phi_5,
        _phi_6,
        _phi_7,
        _phi_8,
    )
    for name, check in zip(FORMULA_NAMES, checks):
        if not check(gi, S, X, d):
            return False, name
    return True, None


def _vertices(gi):
    return range(gi.num_vertices)


def _phi_1(gi, S, X, d):
    return all(
        gi.vertex_label(v) == f"vertex_{i}" for i in range(gi.ell + 1) for v in X[i]
    )


def _phi_2(gi, S, X, d):
    return all(e.label in (EdgeLabel.COPY, EdgeLabel.CROSS) for e in S)


def _phi_3(gi, S, X, d):
    for i in range(1, gi.ell):
        for v in X[i]:
            if not deg_2(v, S):
                return False
            inc = incident_edges(v, S)
            back = any(joins(e, u, v) for e in inc for u in X[i - 1])
            forward = any(joins(f, v, w) for f in inc for w in X[i + 1])
            if not (back and forward):
                return False
    return True


def _phi_4(gi, S, X, d):
    return all(deg_1(v, S) for v in set(X[0]) | set(X[gi.ell]))


def _phi_5(gi, S, X, d):
    return all(
        deg_0(v, S) for v in _vertices(gi) if all(v not in members for members in X)
    )


def _phi_6(gi, S, X, d):
    for e in gi.edges_with(EdgeLabel.AGENT):
        u, v = e.u, e.v
        if not joins(e, u, v):
            return False
        T = _path_in(S, u, v)
        if T is None:
            return False
        if not (deg_1(u, T) and deg_1(v, T)):
            return False
        touched = {x for f in T for x in (f.u, f.v)}
        if not all(deg_0(w, T) or deg_2(w, T) or w in (u, v) for w in touched):
            return False
    return True


def _path_in(S, u, v) -> Optional[frozenset]:
    """
    Edges of a shortest u-v path using edges of S, or None.
    """
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for e in sorted(incident_edges(x, S)):
            y = e.other(x)
            if y not in parent:
                parent[y] = (x, e)
                queue.append(y)
    if v not in parent:
        return None
    path = set()
    x = v
    while parent[x] is not None:
        x, e = parent[x]
        path.add(e)
    return frozenset(path)


def _phi_7(gi, S, X, d):
    for i in range(1, gi.ell + 1):
        before, after = f"vertex_{i - 1}", f"vertex_{i}"
        steps = [
            (u, v, e)
            for e in S
            for u, v in ((e.u, e.v), (e.v, e.u))
            if joins(e, u, v) and gi.vertex_label(u) == before and gi.vertex_label(v) == after
        ]
        for u1, v1, e1 in steps:
            for u2, v2, e2 in steps:
                if e1 == e2:
                    continue
                if gi.has_label(u1, v2, EdgeLabel.COPY) and gi.has_label(
                    u2, v1, EdgeLabel.COPY
                ):
                    return False
    return True


def _phi_8(gi, S, X, d):
    return all(connected_k(gi, X[i], d) for i in range(gi.ell + 1))


#
# Syntax trees
#
@dataclass(frozen=True)
class Term:
    """
    Formula node rendered in prefix notation: ``(op arg1 arg2 ...)``.

    A term without arguments renders as its bare operator name.
    """

    op: str
    args: Tuple[Union["Term", "Binders"], ...] = ()

    def render(self) -> str:
        if not self.args:
            return self.op
        return "(" + " ".join([self.op, *(arg.render() for arg in self.args)]) + ")"


@dataclass(frozen=True)
class Binders:
    """
    Parenthesized list of variable names bound by a quantifier.
    """

    names: Tuple[str, ...]

    def render(self) -> str:
        return "(" + " ".join(self.names) + ")"


@dataclass(frozen=True)
class Definition:
    name: str
    params: Tuple[str, ...]
    body: Term

    def render(self) -> str:
        return f"define {self.name} {Binders(self.params).render()} {self.body.render()}"


def _t(op, *args):
    return Term(op, tuple(_t(a) if isinstance(a, str) else a for a in args))


def _forall(names, body):
    return Term("forall-elem", (Binders(tuple(names.split())), body))


def _exists(names, body):
    return Term("exists-elem", (Binders(tuple(names.split())), body))


def _exists_set(names, body):
    return Term("exists-set", (Binders(tuple(names.split())), body))


def _conj(items):
    items = list(items)
    if not items:
        return Term("true")
    if len(items) == 1:
        return items[0]
    return Term("and", tuple(items))


def mso_definitions(ell: int, d: int) -> Tuple[Definition, ...]:
    """
    Auxiliary predicates followed by phi_1, ..., phi_8 for the given makespan
    and communication range.
    """
    sets = ("S", *(f"X_{i}" for i in range(ell + 1)))
    defs = [
        Definition("deg_0", ("v", "F"), _t("not", _exists("e", _t("and", _t("in", "e", "F"), _t("inc", "v", "e"))))),
        Definition(
            "deg_1",
            ("v", "F"),
            _exists("e", _t(
                "and",
                _t("in", "e", "F"),
                _t("inc", "v", "e"),
                _forall("f", _t("implies", _t("and", _t("in", "f", "F"), _t("inc", "v", "f")), _t("=", "f", "e"))),
            )),
        ),
        Definition(
            "deg_2",
            ("v", "F"),
            _exists("e1 e2", _t(
                "and",
                _t("in", "e1", "F"),
                _t("in", "e2", "F"),
                _t("inc", "v", "e1"),
                _t("inc", "v", "e2"),
                _t("not", _t("=", "e1", "e2")),
                _forall("f", _t(
                    "implies",
                    _t("and", _t("in", "f", "F"), _t("inc", "v", "f")),
                    _t("or", _t("=", "f", "e1"), _t("=", "f", "e2")),
                )),
            )),
        ),
        Definition("joins", ("e", "u", "v"), _t("and", _t("inc", "u", "e"), _t("inc", "v", "e"), _t("not", _t("=", "u", "v")))),
        Definition("dist_0", ("u", "v"), _t("=", "u", "v")),
    ]
    for k in range(1, d + 1):
        prev = f"dist_{k - 1}"
        defs.append(Definition(
            f"dist_{k}",
            ("u", "v"),
            _t("or", _t(prev, "u", "v"), _exists("w e", _t(
                "and", _t(prev, "u", "w"), _t("communication", "e"), _t("joins", "e", "w", "v")
            ))),
        ))
    defs.append(Definition(
        f"connected_{d}",
        ("X",),
        _t("not", _exists_set("A B", _t(
            "and",
            _exists("a", _t("in", "a", "A")),
            _exists("b", _t("in", "b", "B")),
            _forall("v", _t(
                "and",
                _t("implies", _t("or", _t("in", "v", "A"), _t("in", "v", "B")), _t("in", "v", "X")),
                _t("implies", _t("in", "v", "X"), _t(
                    "and",
                    _t("or", _t("in", "v", "A"), _t("in", "v", "B")),
                    _t("not", _t("and", _t("in", "v", "A"), _t("in", "v", "B"))),
                )),
            )),
            _forall("u v", _t("implies", _t("and", _t("in", "u", "A"), _t("in", "v", "B")), _t("not", _t(f"dist_{d}", "u", "v")))),
        ))),
    ))

    last = f"X_{ell}"
    phi = [
        _conj(_forall("v", _t("implies", _t("in", "v", f"X_{i}"), _t(f"vertex_{i}", "v"))) for i in range(ell + 1)),
        _forall("e", _t("implies", _t("in", "e", "S"), _t("or", _t("copy", "e"), _t("cross", "e")))),
        _conj(
            _forall("v", _t("implies", _t("in", "v", f"X_{i}"), _exists("u w e f", _t(
                "and",
                _t("deg_2", "v", "S"),
                _t("in", "u", f"X_{i - 1}"),
                _t("in", "w", f"X_{i + 1}"),
                _t("in", "e", "S"),
                _t("in", "f", "S"),
                _t("joins", "e", "u", "v"),
                _t("joins", "f", "v", "w"),
            ))))
            for i in range(1, ell)
        ),
        _forall("v", _t("implies", _t("or", _t("in", "v", "X_0"), _t("in", "v", last)), _t("deg_1", "v", "S"))),
        _forall("v", _t("implies", _conj(_t("not", _t("in", "v", f"X_{i}")) for i in range(ell + 1)), _t("deg_0", "v", "S"))),
        _forall("e", _t("implies", _t("agent", "e"), _exists("u v", _exists_set("T", _t(
            "and",
            _t("subset", "T", "S"),
            _t("joins", "e", "u", "v"),
            _t("deg_1", "u", "T"),
            _t("deg_1", "v", "T"),
            _forall("w", _t("or", _t("deg_0", "w", "T"), _t("deg_2", "w", "T"), _t("=", "w", "v"), _t("=", "w", "u"))),
        ))))),
        _conj(_t("not", _exists("u1 v1 u2 v2 e1 e2 f1 f2", _t(
            "and",
            _t(f"vertex_{i - 1}", "u1"),
            _t(f"vertex_{i}", "v1"),
            _t(f"vertex_{i - 1}", "u2"),
            _t(f"vertex_{i}", "v2"),
            _t("joins", "e1", "u1", "v1"),
            _t("joins", "e2", "u2", "v2"),
            _t("joins", "f1", "u1", "v2"),
            _t("joins", "f2", "u2", "v1"),
            _t("in", "e1", "S"),
            _t("in", "e2", "S"),
            _t("not", _t("=", "e1", "e2")),
            _t("copy", "f1"),
            _t("copy", "f2"),
        ))) for i in range(1, ell + 1)),
        _conj(_t(f"connected_{d}", f"X_{i}") for i in range(ell + 1)),
    ]
    defs.extend(Definition(name, sets, body) for name, body in zip(FORMULA_NAMES, phi))
    return tuple(defs)


def mso_sentence(ell: int, d: int) -> Term:
    """
    The sentence: there are S, X_0, ..., X_ell satisfying phi_1, ..., phi_8.
    """
    sets = ("S", *(f"X_{i}" for i in range(ell + 1)))
    return Term("exists-set", (Binders(sets), _conj(_t(name, *sets) for name in FORMULA_NAMES)))
