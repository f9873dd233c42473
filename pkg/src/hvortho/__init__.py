"""Good orthogonal drawings of graphs whose edges are pre-labelled H or V."""

from .angle_flow import (
    AngleAssignment,
    GlobalImbalance,
    Infeasible,
    InfeasibleFace,
    NotDrawable,
    assign_angles,
    face_supplies,
    solve_flow,
)
from .drawing import Drawing
from .embedding_search import search_drawing
from .graph_core import (
    ConditionReport,
    GraphError,
    Label,
    LabeledGraph,
    RotationSystem,
    check_label_degrees,
    faces_from_rotation,
)
from .oracle import BudgetExceeded, OracleBudget, enumerate_assignments, grid_search_drawing
from .ortho_layout import draw_plane
from .validate import ValidationReport, check_lemma_bc, rotation_from_drawing, validate_drawing

__all__ = [
    "AngleAssignment",
    "BudgetExceeded",
    "ConditionReport",
    "Drawing",
    "GlobalImbalance",
    "GraphError",
    "Infeasible",
    "InfeasibleFace",
    "Label",
    "LabeledGraph",
    "NotDrawable",
    "OracleBudget",
    "RotationSystem",
    "ValidationReport",
    "assign_angles",
    "check_label_degrees",
    "check_lemma_bc",
    "draw_plane",
    "enumerate_assignments",
    "face_supplies",
    "faces_from_rotation",
    "grid_search_drawing",
    "rotation_from_drawing",
    "search_drawing",
    "solve_flow",
    "validate_drawing",
]
