from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hvortho.drawing import Drawing
from hvortho.graph_core import LabeledGraph
from hvortho.validate import (
    NotCritical,
    _crossings_all_pairs,
    _crossings_swept,
    check_lemma_bc,
    direction_between,
    rotation_from_drawing,
    validate_drawing,
)

from instances import cycle, cycle_rotation

SQUARE = ((0, 0), (1, 0), (1, 1), (0, 1))


def test_unit_rectangle_passes():
    g = cycle(4, "HVHV")
    rep = validate_drawing(g, Drawing(g, SQUARE), cycle_rotation(g))
    assert rep.ok
    assert rep.to_dict()["ok"] is True


def test_overlapping_horizontal_edges():
    g = LabeledGraph.build(4, [(0, 1, "H"), (2, 3, "H")])
    d = Drawing(g, ((0, 0), (2, 0), (1, 0), (3, 0)))
    rep = validate_drawing(g, d)
    assert not rep.planarity_ok
    assert (0, 1) in rep.crossings


def test_mirrored_rectangle_needs_flag():
    g = cycle(4, "HVHV")
    rot = cycle_rotation(g)
    mirrored = Drawing(g, tuple((-x, y) for x, y in SQUARE))
    assert not validate_drawing(g, mirrored, rot).rotation_ok
    assert validate_drawing(g, mirrored, rot, allow_mirror=True).ok


def test_wrong_label():
    g = cycle(4, "VHVH")
    rep = validate_drawing(g, Drawing(g, SQUARE))
    assert not rep.labels_ok
    assert rep.bad_labels == [0, 1, 2, 3]


def test_zero_length_edge_and_coincident_points():
    g = LabeledGraph.build(2, [(0, 1, "H")])
    rep = validate_drawing(g, Drawing(g, ((0, 0), (0, 0))))
    assert not rep.labels_ok
    assert not rep.distinct_points_ok


def test_proper_crossing():
    g = LabeledGraph.build(4, [(0, 1, "H"), (2, 3, "V")])
    rep = validate_drawing(g, Drawing(g, ((0, 1), (2, 1), (1, 0), (1, 2))))
    assert rep.crossings == [(0, 1)]


def test_vertex_on_foreign_edge():
    g = LabeledGraph.build(4, [(0, 1, "H"), (2, 3, "V")])
    rep = validate_drawing(g, Drawing(g, ((0, 0), (2, 0), (1, 0), (1, 1))))
    assert ("vertex", 2, 0) in rep.crossings


def test_incident_edges_same_direction_overlap():
    g = LabeledGraph.build(3, [(0, 1, "H"), (0, 2, "H")])
    rep = validate_drawing(g, Drawing(g, ((0, 0), (1, 0), (2, 0))))
    assert not rep.planarity_ok


def test_rational_coordinates_accepted():
    g = cycle(4, "HVHV")
    half = Fraction(1, 2)
    d = Drawing(g, ((0, 0), (half, 0), (half, half), (0, half)))
    assert validate_drawing(g, d, cycle_rotation(g)).ok


def test_report_string_lists_failures():
    g = LabeledGraph.build(4, [(0, 1, "H"), (2, 3, "V")])
    rep = validate_drawing(g, Drawing(g, ((0, 1), (2, 1), (1, 0), (1, 2))))
    assert "cross" in str(rep).lower()


def test_direction_between():
    assert direction_between((0, 0), (0, 3)) == 0
    assert direction_between((0, 0), (3, 0)) == 1
    assert direction_between((0, 0), (0, -1)) == 2
    assert direction_between((0, 0), (-1, 0)) == 3
    assert direction_between((0, 0), (1, 1)) is None


def test_rotation_from_drawing_round_trip():
    g = cycle(4, "HVHV")
    rot = rotation_from_drawing(g, Drawing(g, SQUARE))
    assert validate_drawing(g, Drawing(g, SQUARE), rot).ok


# Face 0..5 with critical edge (2, 3): both neighbours are H, the edge is V.
U_GRAPH = LabeledGraph.build(6, [(0, 1, "V"), (1, 2, "H"), (2, 3, "V"), (3, 4, "H"), (4, 5, "V"), (5, 0, "H")])
U_FACE = [0, 1, 2, 3, 4, 5]


def test_u_shape_passes_lemma():
    pts = ((0, 0), (0, 2), (2, 2), (2, 1), (1, 1), (1, 0))
    assert check_lemma_bc(U_GRAPH, Drawing(U_GRAPH, pts), U_FACE, 2)


def test_z_shape_fails_lemma():
    pts = ((0, 0), (0, 2), (2, 2), (2, 1), (3, 1), (3, 0))
    assert not check_lemma_bc(U_GRAPH, Drawing(U_GRAPH, pts), U_FACE, 2)


def test_lemma_needs_critical_edge():
    g = cycle(6, "HVHHVH")
    pts = ((0, 0), (1, 0), (1, 1), (2, 1), (3, 1), (3, 0))
    with pytest.raises(NotCritical):
        check_lemma_bc(g, Drawing(g, pts), list(range(6)), 0)


def _raster_crossings(g: LabeledGraph, pts) -> bool:
    """Independent recount: edges share a half-grid point other than a common endpoint."""
    owner: dict[tuple[int, int], list[int]] = {}
    for e, (u, v, _) in enumerate(g.edges):
        (x1, y1), (x2, y2) = pts[u], pts[v]
        if x1 == x2:
            cells = [(2 * x1, y) for y in range(2 * min(y1, y2), 2 * max(y1, y2) + 1)]
        else:
            cells = [(x, 2 * y1) for x in range(2 * min(x1, x2), 2 * max(x1, x2) + 1)]
        for c in cells:
            owner.setdefault(c, []).append(e)
    for c, es in owner.items():
        for i in range(len(es)):
            for j in range(i + 1, len(es)):
                a, b = g.edges[es[i]], g.edges[es[j]]
                shared = {a[0], a[1]} & {b[0], b[1]}
                if not shared or c != tuple(2 * t for t in pts[next(iter(shared))]):
                    return True
    for w, p in enumerate(pts):
        for e in owner.get((2 * p[0], 2 * p[1]), []):
            if w not in g.edges[e][:2]:
                return True
    return False


@st.composite
def axis_drawings(draw):
    n = draw(st.integers(2, 6))
    pts = draw(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=n, max_size=n, unique=True))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if pts[u][0] == pts[v][0] or pts[u][1] == pts[v][1]]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=6)) if pairs else []
    edges = [(u, v, "H" if pts[u][1] == pts[v][1] else "V") for u, v in chosen]
    return LabeledGraph.build(n, edges), tuple(pts)


@settings(max_examples=300, deadline=None)
@given(axis_drawings())
def test_planarity_matches_raster_recount(inst):
    g, pts = inst
    rep = validate_drawing(g, Drawing(g, pts))
    assert rep.labels_ok and rep.distinct_points_ok
    assert rep.planarity_ok == (not _raster_crossings(g, pts))


@st.composite
def crowded_axis_drawings(draw):
    """Axis-parallel edges on a tiny grid, so overlaps and crossings are common."""
    n = draw(st.integers(2, 9))
    pts = draw(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=n, max_size=n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (pts[u][0] == pts[v][0]) != (pts[u][1] == pts[v][1])]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=10)) if pairs else []
    edges = [(u, v, "H" if pts[u][1] == pts[v][1] else "V") for u, v in chosen]
    return LabeledGraph.build(n, edges), tuple(pts)


@settings(max_examples=400, deadline=None)
@given(crowded_axis_drawings())
def test_sweep_matches_all_pairs(inst):
    g, pts = inst
    assert _crossings_swept(g, pts) == _crossings_all_pairs(g, pts)


def test_large_grid_validates_quickly():
    import random
    import time

    from instances import random_grid_instance

    g, rot, pts = random_grid_instance(random.Random(3), 60, 60)
    start = time.perf_counter()
    assert validate_drawing(g, Drawing(g, tuple(pts)), rot).ok
    assert time.perf_counter() - start < 5
