"""Edge colouring of multigraphs within the local bound, and colouring of line
graphs and decomposed quasi-line graphs."""

from .colouring import PartialEdgeColouring, format_colouring, kempe_swap, missing_colours, read_colouring, validate
from .driver import edge_colour, edge_colour_optimal_local, extend_one_edge
from .errors import (
    ColouringError,
    GuardExceeded,
    InfeasiblePalette,
    InvariantViolation,
    LoopError,
    ParseError,
    StructureError,
)
from .fans import Fan, assert_resolvable_by_size, build_maximal_fan, resolve_fan, rotate_from
from .linegraph import SimpleGraph, check_line_correspondence, line_graph, vertex_colour_line_graph
from .multigraph import (
    EdgeBoundReport,
    Multigraph,
    local_edge_bound,
    multiplicity,
    read_multigraph,
    triangle_weight,
)
from .oracle import OracleGuard, chromatic_index_bf, chromatic_number_bf, local_vertex_bound_bf, max_clique_containing

__version__ = "0.1.0"

__all__ = [
    "ColouringError",
    "EdgeBoundReport",
    "Fan",
    "GuardExceeded",
    "InfeasiblePalette",
    "InvariantViolation",
    "LoopError",
    "Multigraph",
    "OracleGuard",
    "ParseError",
    "PartialEdgeColouring",
    "SimpleGraph",
    "StructureError",
    "assert_resolvable_by_size",
    "build_maximal_fan",
    "check_line_correspondence",
    "chromatic_index_bf",
    "chromatic_number_bf",
    "edge_colour",
    "edge_colour_optimal_local",
    "extend_one_edge",
    "format_colouring",
    "kempe_swap",
    "line_graph",
    "local_edge_bound",
    "local_vertex_bound_bf",
    "max_clique_containing",
    "missing_colours",
    "multiplicity",
    "read_colouring",
    "read_multigraph",
    "resolve_fan",
    "rotate_from",
    "triangle_weight",
    "validate",
    "vertex_colour_line_graph",
]
