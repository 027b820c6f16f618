"""Edge-primitive and edge-quasiprimitive graph analysis via coset graphs
over finite permutation groups."""

from . import (analysis, catalog, config, gf, graphs, onanscott, perm,
               psl2, spor, structured, tables)
from ._kernels import BACKEND as KERNEL_BACKEND
from .perm import GroupHandle, Subgroup, bsgs
from .graphs import Graph, GroupAction, coset_graph

__all__ = [
    "analysis",
    "catalog",
    "config",
    "gf",
    "graphs",
    "onanscott",
    "perm",
    "psl2",
    "spor",
    "structured",
    "tables",
    "KERNEL_BACKEND",
    "GroupHandle",
    "Subgroup",
    "bsgs",
    "Graph",
    "GroupAction",
    "coset_graph",
]
