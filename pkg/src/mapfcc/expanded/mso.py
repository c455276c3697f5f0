"""
Text dump of a time-expanded graph together with the sentence that holds on
it exactly for yes-instances.

Format (version 1), one item per line::

    msogi 1
    n <vertices of the movement graph>
    ell <makespan>
    d <communication range>
    vertices <count>
    v <id> vertex_<layer>          (one line per vertex, by id)
    edges <count>
    e <id> <u> <v> <label>         (one line per edge, u <= v)
    define <name> (<params>) <body>
    sentence <body>

Bodies use prefix notation. Quantifiers are ``exists-elem`` and
``forall-elem`` over vertices and edges and ``exists-set`` over sets. Atoms
are ``(inc v e)``, ``(in x X)``, ``(subset T S)``, ``(= x y)`` and the unary
labels ``copy``, ``cross``, ``communication``, ``agent`` and ``vertex_<i>``.
"""
from .formula import mso_definitions, mso_sentence
from .time_expanded import TimeExpandedGraph

FORMAT_HEADER = "msogi 1"


def emit_mso_structure(gi: TimeExpandedGraph, d: int) -> str:
    lines = [
        FORMAT_HEADER,
        f"n {gi.n_base}",
        f"ell {gi.ell}",
        f"d {d}",
        f"vertices {gi.num_vertices}",
    ]
    lines.extend(f"v {x} {gi.vertex_label(x)}" for x in gi.vertex_ids())
    lines.append(f"edges {len(gi.edges)}")
    lines.extend(
        f"e {i} {e.u} {e.v} {e.label.value}" for i, e in enumerate(gi.edges)
    )
    lines.extend(definition.render() for definition in mso_definitions(gi.ell, d))
    lines.append(f"sentence {mso_sentence(gi.ell, d).render()}")
    return "\n".join(lines) + "\n"
