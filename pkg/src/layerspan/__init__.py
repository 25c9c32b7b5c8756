"""Exact vertex spans (strong, direct, Cartesian) of graphs and multilayered cycles."""

from .engine import (
    ProductGraph,
    SpanReport,
    product_graph,
    span_by_components,
    span_oracle,
    span_oracle_value,
    witness_tracks,
)
from .graph import (
    Graph,
    LayeredVertexId,
    Layering,
    complete,
    cycle,
    diameter,
    distance,
    from_edge_list,
    multilayer,
    multilayered_cycle,
    path,
)
from .strategies import cartesian_strategy, strong_strategy
from .tracks import (
    MovementRule,
    StepKind,
    classify_step,
    track_distance,
    validate_lazy,
    validate_ltrack,
    validate_opposite,
)

__all__ = [
    "Graph", "LayeredVertexId", "Layering", "MovementRule", "ProductGraph", "SpanReport", "StepKind",
    "cartesian_strategy", "classify_step", "complete", "cycle", "diameter", "distance", "from_edge_list",
    "multilayer", "multilayered_cycle", "path", "product_graph", "span_by_components", "span_oracle",
    "span_oracle_value", "strong_strategy", "track_distance", "validate_lazy", "validate_ltrack",
    "validate_opposite", "witness_tracks",
]
