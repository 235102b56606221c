"""Large acyclic sets, feedback arc sets and planar duals of oriented planar graphs."""

from .embedding import (
    DirectedCut,
    DualDigraph,
    FaceSet,
    dual,
    enumerate_directed_cuts,
    trace_faces,
    verify_bijection,
)
from .fas import (
    FeedbackCertificate,
    count_minimum_fas,
    max_cycle_packing,
    min_feedback_arc_set,
    verify_lucchesi_younger,
)
from .cycles import enumerate_simple_cycles
from .generators import (
    ExpectedStats,
    FamilySpec,
    figure1,
    generate,
    random_planar_oriented,
)
from .graph import (
    BudgetExhausted,
    Dart,
    Digirth,
    GraphError,
    PlanarDigraph,
    ValidationReport,
    digirth,
    dumps,
    induced_subgraph,
    is_acyclic,
    loads,
    validate,
)
from .pipeline import AcyclicSetResult, BoundViolation, acyclic_set, greedy_cover, guarantee
from .prop31 import enumerate_vertex_covers, verify_prop31

__all__ = [
    "AcyclicSetResult",
    "BoundViolation",
    "BudgetExhausted",
    "Dart",
    "Digirth",
    "DirectedCut",
    "DualDigraph",
    "ExpectedStats",
    "FaceSet",
    "FamilySpec",
    "FeedbackCertificate",
    "GraphError",
    "PlanarDigraph",
    "ValidationReport",
    "acyclic_set",
    "count_minimum_fas",
    "digirth",
    "dual",
    "dumps",
    "enumerate_directed_cuts",
    "enumerate_simple_cycles",
    "enumerate_vertex_covers",
    "figure1",
    "generate",
    "greedy_cover",
    "guarantee",
    "induced_subgraph",
    "is_acyclic",
    "loads",
    "max_cycle_packing",
    "min_feedback_arc_set",
    "random_planar_oriented",
    "trace_faces",
    "validate",
    "verify_bijection",
    "verify_lucchesi_younger",
    "verify_prop31",
]
