from __future__ import annotations

import itertools
import random

import pytest

from hvortho.angle_flow import NotDrawable
from hvortho.drawing import Drawing
from hvortho.graph_core import Label, LabeledGraph
from hvortho.oracle import OracleBudget, grid_search_drawing
from hvortho.outerplanar import (
    ConditionsViolated,
    NotBiconnected,
    NotOuterplanar,
    canonical_embedding,
    check_conditions,
    draw_outerplanar,
    face_stats,
    segments,
)
from hvortho.outerplanar.construct import draw_face
from hvortho.validate import check_lemma_bc, validate_drawing

from instances import cycle, outerplanar_catalog


def ladder(k: int, labels) -> LabeledGraph:
    """k squares in a row; ``labels`` gives one label per edge."""
    top = list(range(k + 1))
    bottom = list(range(k + 1, 2 * k + 2))
    pairs = [(top[i], top[i + 1]) for i in range(k)] + [(bottom[i], bottom[i + 1]) for i in range(k)]
    pairs += [(top[i], bottom[i]) for i in range(k + 1)]
    return LabeledGraph.build(2 * k + 2, [(u, v, l) for (u, v), l in zip(pairs, labels)])


def straight_ladder(k: int) -> LabeledGraph:
    return ladder(k, "H" * (2 * k) + "V" * (k + 1))


def hexagon_with_flaps(flaps: int) -> LabeledGraph:
    """Alternating hexagon; a square hangs on each of its first ``flaps`` V edges."""
    edges = [(0, 1, "H"), (1, 2, "V"), (2, 3, "H"), (3, 4, "V"), (4, 5, "H"), (5, 0, "V")]
    n = 6
    for x, y in [(1, 2), (3, 4), (5, 0)][:flaps]:
        edges += [(x, n, "H"), (n, n + 1, "V"), (n + 1, y, "H")]
        n += 2
    return LabeledGraph.build(n, edges)


def _assert_good(g: LabeledGraph, d) -> None:
    assert validate_drawing(g, d).ok
    emb = canonical_embedding(g)
    for f in emb.inner:
        verts = emb.face_vertices(f)
        for i in face_stats(emb, f).critical:
            assert check_lemma_bc(g, d, verts, i)


def test_segments_cyclic_runs():
    labs = [Label(c) for c in "HHVHVV"]
    runs = segments([0, 1, 2, 3, 4, 5], labs)
    assert [(r.label.value, r.vertices) for r in runs] == [
        ("H", (0, 1, 2)),
        ("V", (2, 3)),
        ("H", (3, 4)),
        ("V", (4, 5, 0)),
    ]
    assert [r.length for r in runs] == [2, 1, 1, 2]


def test_segments_single_label():
    runs = segments([0, 1, 2], [Label.H] * 3)
    assert len(runs) == 1 and runs[0].length == 3


def test_canonical_embedding_orders_outer_cycle():
    g = straight_ladder(2)
    emb = canonical_embedding(g)
    assert sorted(emb.cycle) == list(range(6))
    assert len(emb.inner) == 2
    assert len(emb.chords()) == 1
    assert all(len(v) == 1 for v in emb.dual_tree().values())


def test_not_biconnected():
    g = LabeledGraph.build(3, [(0, 1, "H"), (1, 2, "V")])
    with pytest.raises(NotBiconnected):
        check_conditions(g)


def test_not_outerplanar():
    g = LabeledGraph.build(4, [(0, 1, "H"), (1, 2, "V"), (2, 0, "H"), (0, 3, "V"), (1, 3, "H"), (2, 3, "V")])
    with pytest.raises(NotOuterplanar):
        check_conditions(g)


def test_rectangle_face_has_no_critical_edges():
    emb = canonical_embedding(cycle(4, "HVHV"))
    (f,) = emb.inner
    st = face_stats(emb, f)
    assert (st.e_v, st.e_h, st.c_v, st.c_h) == (2, 2, 0, 0)


def test_inner_vertical_edge_between_horizontals_is_critical():
    # hexagon 0..5 labelled H,V,H,H,V,H; its edge (4, 5) is shared with square 4-6-7-5
    edges = [(0, 1, "H"), (1, 2, "V"), (2, 3, "H"), (3, 4, "H"), (4, 5, "V"), (5, 0, "H"), (4, 6, "H"), (6, 7, "V"), (7, 5, "H")]
    g = LabeledGraph.build(8, edges)
    emb = canonical_embedding(g)
    hexagon = next(f for f in emb.inner if len(emb.face_vertices(f)) == 6)
    st = face_stats(emb, hexagon)
    assert (st.c_v, st.c_h) == (1, 0)
    verts = emb.face_vertices(hexagon)
    (i,) = st.critical
    assert {verts[i], verts[(i + 1) % 6]} == {4, 5}


def _random_maximal_outerplanar(rng: random.Random, n: int) -> LabeledGraph:
    pairs = [(i, (i + 1) % n) for i in range(n)]

    def triangulate(lo: int, hi: int) -> None:
        if hi - lo < 2:
            return
        mid = rng.randrange(lo + 1, hi)
        for a, b in ((lo, mid), (mid, hi)):
            if b - a > 1 and (a, b) != (0, n - 1):
                pairs.append((a, b))
        triangulate(lo, mid)
        triangulate(mid, hi)

    triangulate(0, n - 1)
    return LabeledGraph.build(n, [(u, v, rng.choice("HV")) for u, v in pairs])


def test_face_stats_match_recount():
    rng = random.Random(2)
    for _ in range(40):
        g = _random_maximal_outerplanar(rng, rng.randrange(4, 12))
        emb = canonical_embedding(g)
        walks = {f: emb.face_vertices(f) for f in emb.inner}
        # an edge is inner when two inner faces use it
        uses: dict[frozenset, int] = {}
        for w in walks.values():
            for i in range(len(w)):
                key = frozenset((w[i], w[(i + 1) % len(w)]))
                uses[key] = uses.get(key, 0) + 1
        idx = g.edge_index()
        for f, w in walks.items():
            k = len(w)
            lab = [g.edges[idx[frozenset((w[i], w[(i + 1) % k]))]][2] for i in range(k)]
            crit = [
                i for i in range(k)
                if uses[frozenset((w[i], w[(i + 1) % k]))] == 2 and lab[i - 1] == lab[(i + 1) % k] != lab[i]
            ]
            st = face_stats(emb, f)
            assert st.e_v == lab.count(Label.V) and st.e_h == lab.count(Label.H)
            assert st.c_v == sum(1 for i in crit if lab[i] is Label.V)
            assert st.c_h == sum(1 for i in crit if lab[i] is Label.H)
            assert 0 <= st.c_v <= st.e_v and 0 <= st.c_h <= st.e_h


def test_square_passes_conditions():
    assert check_conditions(cycle(4, "HVHV")).ok


@pytest.mark.parametrize("labels", ["HHH", "HHV", "HVV", "VVV"])
def test_triangles_fail_c1(labels):
    assert check_conditions(cycle(3, labels)).kinds() == {"C1"}


def test_c2_violation():
    g = hexagon_with_flaps(3)
    rep = check_conditions(g)
    assert rep.kinds() == {"C2"}
    assert grid_search_drawing(g, OracleBudget(max_vertices=12)) is None


def test_even_critical_count_is_fine():
    g = hexagon_with_flaps(2)
    assert check_conditions(g).ok
    _assert_good(g, draw_outerplanar(g))


def test_c3_violation():
    # vertex 0 has three H edges
    edges = [(0, 1, "H"), (1, 2, "V"), (2, 3, "H"), (3, 0, "H"), (0, 4, "H"), (4, 5, "V"), (5, 6, "H"), (6, 1, "V")]
    g = LabeledGraph.build(7, edges)
    assert "C3" in check_conditions(g).kinds()


def test_draw_single_square():
    g = cycle(4, "HVHV")
    d = draw_outerplanar(g)
    assert sorted(d.points) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_two_squares_sharing_critical_edge():
    # squares 0-1-4-5 and 1-2-3-4 share the vertical edge (1, 4), which is
    # v-critical in both faces
    g = ladder(2, "HHHHVVV")
    emb = canonical_embedding(g)
    assert all(face_stats(emb, f).c_v == 1 for f in emb.inner)
    _assert_good(g, draw_outerplanar(g))


@pytest.mark.parametrize("k", [1, 2, 5, 17, 50])
def test_ladders(k):
    g = straight_ladder(k)
    _assert_good(g, draw_outerplanar(g))


def test_draw_refuses_violations():
    with pytest.raises(ConditionsViolated) as err:
        draw_outerplanar(cycle(3, "HVH"))
    assert err.value.stage.startswith("condition")


def test_degree_four_outerplanar():
    # octagon with chords (0, 3) and (0, 5): vertex 0 has degree 4
    pairs = [(i, (i + 1) % 8) for i in range(8)] + [(0, 3), (0, 5)]
    drawn = 0
    for labs in itertools.product("HV", repeat=len(pairs)):
        g = LabeledGraph.build(8, [(u, v, l) for (u, v), l in zip(pairs, labs)])
        if "C3" in check_conditions(g).kinds():
            with pytest.raises(ConditionsViolated):
                draw_outerplanar(g)
            continue
        truth = grid_search_drawing(g) is not None
        try:
            d = draw_outerplanar(g)
        except NotDrawable:
            assert not truth
            continue
        assert truth
        assert validate_drawing(g, d).ok
        drawn += 1
    # frozen from the grid oracle
    assert drawn == 2


def test_draw_face_rectangle():
    emb = canonical_embedding(cycle(4, "HVHV"))
    (f,) = emb.inner
    fd = draw_face(emb, f)
    assert sorted(fd.points.values()) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert all(fd.flag.contains(p) for p in fd.points.values())
    h, v = fd.flag.borders
    assert h.label is Label.H and v.label is Label.V
    assert h.vertices[-1] == v.vertices[0]


def test_draw_face_u_turns_at_critical_edges():
    rng = random.Random(9)
    checked = 0
    for n, pairs in outerplanar_catalog(8, min_n=5):
        for _ in range(40):
            g = LabeledGraph.build(n, [(u, v, rng.choice("HV")) for u, v in pairs])
            if not check_conditions(g).ok:
                continue
            emb = canonical_embedding(g)
            for f in emb.inner:
                fd = draw_face(emb, f)
                verts = emb.face_vertices(f)
                k = len(verts)
                sub = LabeledGraph.build(k, [(i, (i + 1) % k, lab) for i, lab in enumerate(emb.face_labels(f))])
                d = Drawing(sub, tuple(fd.points[v] for v in verts))
                assert validate_drawing(sub, d).ok
                assert all(fd.flag.contains(p) for p in fd.points.values())
                for i in face_stats(emb, f).critical:
                    assert check_lemma_bc(sub, d, list(range(k)), i)
                    checked += 1
    assert checked > 0
