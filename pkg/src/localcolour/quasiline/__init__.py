"""Quasi-line graphs given by explicit decompositions."""

from .cutset import paste_on_clique_cutset
from .graphs import exact_colouring, local_bound
from .intervals import (
    CircularIntervalGraph,
    LinearIntervalGraph,
    colour_circular_interval_exact,
    colour_linear_interval,
    greedy_stable_set,
    roll_back,
)
from .join import CanonicalJoin, extend_over_join, join_bound, join_bound_of
from .strips import Strip, StripComposition, is_quasi_line, realize
from .tree import (
    CircLeaf,
    CutNode,
    DecompositionTree,
    JoinNode,
    LineLeaf,
    colour_decomposition,
    format_qltree,
    load_qltree,
    read_qltree,
    tree_from_composition,
)

__all__ = [
    "CanonicalJoin",
    "CircLeaf",
    "CircularIntervalGraph",
    "CutNode",
    "DecompositionTree",
    "JoinNode",
    "LineLeaf",
    "LinearIntervalGraph",
    "Strip",
    "StripComposition",
    "colour_circular_interval_exact",
    "colour_decomposition",
    "colour_linear_interval",
    "exact_colouring",
    "extend_over_join",
    "format_qltree",
    "greedy_stable_set",
    "is_quasi_line",
    "join_bound",
    "join_bound_of",
    "load_qltree",
    "local_bound",
    "paste_on_clique_cutset",
    "read_qltree",
    "realize",
    "roll_back",
    "tree_from_composition",
]
