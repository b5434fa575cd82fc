"""Interval and continuous edge colorings of multigraphs.

Thin re-export of the compiled core. Graphs are loopless multigraphs with
1-based vertex and edge ids; colorings assign a positive color to every edge.
"""

from imcol._core import (  # noqa: F401
    Bipartition,
    EdgeColoring,
    EquivalenceReport,
    InputError,
    InternalError,
    Multigraph,
    ParsedColoring,
    ParsedGraph,
    Preassignment,
    RealizeOutcome,
    ReductionOutput,
    Spectrum,
    StepUpCase,
    StepUpReport,
    TraceOrigin,
    VertexSet,
    build_reduction,
    class_size_vector,
    classify_step_up,
    compress_to_delta,
    continuous_on_part,
    interval_closure_check,
    interval_step_up,
    is_continuous_on,
    is_interval_on,
    is_proper,
    kempe_swap,
    normalize_shift,
    oracle,
    parse_coloring,
    parse_graph,
    parse_preassignment,
    realize_spectrum,
    regular_step_down,
    sequential_max_coloring,
    serialize_coloring,
    serialize_graph,
    serialize_preassignment,
    serialize_trace,
    spectrum,
    verify_equivalences,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
