"""Biconnected outerplanar graphs: recognition, construction, degree-4 gadget."""

from .conditions import check_c1, check_conditions
from .construct import (
    ConditionsViolated,
    GadgetRun,
    ShapeError,
    draw_outerplanar,
    draw_via_gadgets,
    embedding_from_directions,
    shape_embedding,
)
from .gadget import GadgetMap, NonAlternatingDegree4, expand_directions, recover_degree4_drawing, transform_degree4
from .embedding import (
    FaceStats,
    NotBiconnected,
    NotOuterplanar,
    OuterplanarEmbedding,
    Segment,
    canonical_embedding,
    face_stats,
    outer_cycle,
    segments,
)

__all__ = [
    "ConditionsViolated",
    "FaceStats",
    "GadgetMap",
    "GadgetRun",
    "NonAlternatingDegree4",
    "NotBiconnected",
    "NotOuterplanar",
    "OuterplanarEmbedding",
    "Segment",
    "ShapeError",
    "canonical_embedding",
    "check_c1",
    "check_conditions",
    "draw_outerplanar",
    "draw_via_gadgets",
    "embedding_from_directions",
    "expand_directions",
    "face_stats",
    "outer_cycle",
    "recover_degree4_drawing",
    "segments",
    "shape_embedding",
    "transform_degree4",
]
