"""Certified short stick realizations of knots given by arc presentations."""

from .arcpres import (
    ArcPresentation,
    BetaCounts,
    ChordType,
    Crossing,
    Diagram,
    ValidationReport,
    classify,
    crossing_pairs,
    cyclic_shift,
    destabilize_top,
    diagram,
    layout,
    normalize,
    parse,
    random_presentation,
    serialize,
    simplify,
    validate,
)
from .bounds import (
    BoundReport,
    NegamiBounds,
    bae_park_upper,
    bound_report,
    huh_oh_upper,
    negami_bounds,
    theorem2_upper,
)
from .construct import (
    Certificate,
    HeightAssignment,
    StickKnot,
    assign_heights,
    build_full,
    build_k1,
    build_k2,
    obj_export,
    polygon_json,
    stick_count,
    top_reduction,
    triangle_reductions,
    verify_heights,
)
from .errors import InternalVerificationError, InvalidArcPresentation
from .geom import EmbeddingReport, binding_points, polygon_embedded
from .invariants import (
    LaurentPoly,
    MatchReport,
    ProjectedDiagram,
    alexander,
    determinant,
    match,
    project,
)

__version__ = "0.1.0"

__all__ = [
    "ArcPresentation",
    "BetaCounts",
    "BoundReport",
    "Certificate",
    "ChordType",
    "Crossing",
    "Diagram",
    "EmbeddingReport",
    "HeightAssignment",
    "InternalVerificationError",
    "InvalidArcPresentation",
    "LaurentPoly",
    "MatchReport",
    "NegamiBounds",
    "ProjectedDiagram",
    "StickKnot",
    "ValidationReport",
    "alexander",
    "assign_heights",
    "bae_park_upper",
    "binding_points",
    "bound_report",
    "build_full",
    "build_k1",
    "build_k2",
    "classify",
    "crossing_pairs",
    "cyclic_shift",
    "destabilize_top",
    "determinant",
    "diagram",
    "huh_oh_upper",
    "layout",
    "match",
    "negami_bounds",
    "normalize",
    "obj_export",
    "parse",
    "polygon_embedded",
    "polygon_json",
    "project",
    "random_presentation",
    "serialize",
    "simplify",
    "stick_count",
    "theorem2_upper",
    "top_reduction",
    "triangle_reductions",
    "validate",
    "verify_heights",
]
