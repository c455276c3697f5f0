"""
Executable hardness construction from multicolored clique.
"""
from .mcc import MccInstance, brute_clique, pad_classes
from .gadgets import (
    GadgetLayout,
    ReductionAudit,
    audit_reduction,
    build_edge_gadget,
    build_vertex_gadget,
    clique_from_schedule,
    clique_schedule,
    reduce_mcc,
)
