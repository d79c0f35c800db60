"""Binary matroid splitting toolkit.

Exact GF(2) linear algebra, a brute-force matroid oracle, the split
construction with closed-form predictions for circuits, ranks, closures
and flats, and a graph-level vertex split with an equivalence check.
"""

from . import errors
from .gf2 import (
    GF2Matrix,
    GF2Vector,
    column_sum,
    columns_dependent,
    format_matrix,
    parse_matrix,
    rank,
)
from .graphs import (
    LabeledGraph,
    LineSplitSpec,
    format_graph,
    incidence_matrix,
    n_line_split,
    parse_graph,
    verify_equivalence,
)
from .matroid import EX, OX, BinaryMatroid, classify_circuit
from .splitting import (
    CLOSURE_CASE_IDS,
    CircuitFamily,
    ClosureCaseReport,
    SplitContext,
    SplitQuery,
    build_split_matrix,
    closure_shapes,
    contains_ox_circuit,
    find_ox_subcircuit,
    predict_circuits,
    predict_closure,
    predict_is_flat,
    predict_rank,
    set_F,
    set_T,
    split_matroid,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryMatroid",
    "CLOSURE_CASE_IDS",
    "CircuitFamily",
    "ClosureCaseReport",
    "EX",
    "GF2Matrix",
    "GF2Vector",
    "LabeledGraph",
    "LineSplitSpec",
    "OX",
    "SplitContext",
    "SplitQuery",
    "build_split_matrix",
    "classify_circuit",
    "closure_shapes",
    "column_sum",
    "columns_dependent",
    "contains_ox_circuit",
    "errors",
    "find_ox_subcircuit",
    "format_graph",
    "format_matrix",
    "incidence_matrix",
    "n_line_split",
    "parse_graph",
    "parse_matrix",
    "predict_circuits",
    "predict_closure",
    "predict_is_flat",
    "predict_rank",
    "rank",
    "set_F",
    "set_T",
    "split_matroid",
    "verify_equivalence",
]
