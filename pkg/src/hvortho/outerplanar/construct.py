"""Drawing biconnected outerplanar graphs of maximum degree 3.

Every inner face of the canonical embedding becomes an orthogonal polygon.
Two faces sharing a chord are drawn either side by side or one nested in
the other; the choice fixes the polygon angles at the chord's endpoints:

* at a degree-3 vertex the three edges leave a straight angle (2) between
  the two equally-labelled edges and right angles (1) elsewhere;
* a face owns the gap between its own edge and the chord, unless it
  contains its neighbour, in which case it owns the other two gaps
  (4 minus its own gap).

Per face the angles must sum to 2k - 4, with the free corners (degree-2
vertices whose edges differ in label) contributing 1 or 3 each.  A tree
dynamic program over the weak dual picks the nesting relations, where a
face may sit inside at most one of its neighbours.  The chosen shapes
induce a rotation system and an outer face, which are handed to the plane
pipeline for coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..angle_flow import NotDrawable
from ..drawing import Drawing
from ..embedding_search import search_drawing
from ..graph_core import ConditionReport, Label, LabeledGraph, RotationSystem, faces_from_rotation
from ..ortho_layout import draw_plane
from ..validate import direction_between
from .conditions import check_conditions
from .embedding import OuterplanarEmbedding, Segment, canonical_embedding
from .gadget import expand_directions, recover_degree4_drawing, transform_degree4

SIDE = "side"  # the two faces lie on opposite sides of the chord
INSIDE = "inside"  # the face lies inside its parent
AROUND = "around"  # the parent lies inside the face


class ConditionsViolated(NotDrawable):
    def __init__(self, report) -> None:
        first = report.violations[0]
        super().__init__(f"condition {first.kind}", first.element, first.detail)
        self.report = report


class ShapeError(AssertionError):
    """The face shapes do not assemble into a consistent drawing (internal fault)."""


@dataclass
class _Face:
    fid: int
    verts: list[int]
    fixed_sum: int
    free: list[int]  # positions of free corners
    chords: dict[int, int] = field(default_factory=dict)  # neighbour face -> own-gap sum
    own: dict[int, int] = field(default_factory=dict)  # position -> own gap at a chord end
    chord_of: dict[int, int] = field(default_factory=dict)  # position -> neighbour face

    @property
    def target(self) -> int:
        return 2 * len(self.verts) - 4


def _faces(emb: OuterplanarEmbedding) -> dict[int, _Face]:
    g = emb.graph
    deg = g.degree()
    idx = g.edge_index()
    out = {}
    tree = emb.dual_tree()
    chord_face = {}
    for f, nbrs in tree.items():
        for h, e in nbrs:
            chord_face[(f, e)] = h
    for f in emb.inner:
        verts = emb.face_vertices(f)
        k = len(verts)
        labs = emb.face_labels(f)
        face = _Face(f, verts, 0, [])
        for i, v in enumerate(verts):
            before, after = labs[i - 1], labs[i]
            if deg[v] == 2:
                if before == after:
                    face.fixed_sum += 2
                else:
                    face.free.append(i)
                continue
            if deg[v] != 3:
                raise ValueError("degree-4 vertices must be handled before shaping")
            e_in = idx[frozenset((verts[i - 1], v))]
            e_out = idx[frozenset((v, verts[(i + 1) % k]))]
            if not emb.is_outer_edge(verts[i - 1], v):
                chord, mine = e_in, after
            else:
                chord, mine = e_out, before
            gap = 2 if mine == g.edges[chord][2] else 1
            face.own[i] = gap
            face.chord_of[i] = chord_face[(f, chord)]
        for i, h in face.chord_of.items():
            face.chords[h] = face.chords.get(h, 0) + face.own[i]
        out[f] = face
    return out


def _free_fits(total: int, m: int) -> bool:
    return m <= total <= 3 * m and (total - m) % 2 == 0


class _Planner:
    def __init__(self, emb: OuterplanarEmbedding) -> None:
        self.emb = emb
        self.faces = _faces(emb)
        tree = emb.dual_tree()
        self.root = max(emb.inner, key=lambda f: (len(self.faces[f].verts), -f))
        self.parent: dict[int, int | None] = {self.root: None}
        self.children: dict[int, list[int]] = {f: [] for f in emb.inner}
        order = [self.root]
        for f in order:
            for h, _ in sorted(tree[f]):
                if h not in self.parent:
                    self.parent[h] = f
                    self.children[f].append(h)
                    order.append(h)
        self.order = order
        self.feasible: dict[tuple[int, str | None], bool] = {}

    def _plan_face(self, f: int, rel: str | None):
        """Child relations and free-corner total for face ``f``, or None."""
        face = self.faces[f]
        p = self.parent[f]
        base = face.fixed_sum
        cont = 0
        if p is not None:
            s = face.chords[p]
            base += 8 - s if rel == AROUND else s
            cont = 1 if rel == INSIDE else 0
        layers = [{(base, cont): None}]
        for h in self.children[f]:
            s = face.chords[h]
            options = [(r, add, dc) for r, add, dc in ((SIDE, s, 0), (INSIDE, 8 - s, 0), (AROUND, s, 1))
                       if self.feasible[(h, r)]]
            nxt: dict[tuple[int, int], tuple] = {}
            for (tot, c) in layers[-1]:
                for r, add, dc in options:
                    key = (tot + add, c + dc)
                    if key[1] <= 1 and key not in nxt:
                        nxt[key] = ((tot, c), r)
            layers.append(nxt)
        m = len(face.free)
        for (tot, c) in layers[-1]:
            if _free_fits(face.target - tot, m):
                rels = {}
                key = (tot, c)
                for h, layer in zip(reversed(self.children[f]), reversed(layers[1:])):
                    key, r = layer[key]
                    rels[h] = r
                return rels, face.target - tot
        return None

    def plan(self):
        for f in reversed(self.order):
            rels = (None,) if self.parent[f] is None else (SIDE, INSIDE, AROUND)
            for r in rels:
                self.feasible[(f, r)] = self._plan_face(f, r) is not None
        if not self.feasible[(self.root, None)]:
            return None
        relation: dict[int, str | None] = {self.root: None}
        free_total: dict[int, int] = {}
        for f in self.order:
            rels, free = self._plan_face(f, relation[f])
            relation.update(rels)
            free_total[f] = free
        return relation, free_total


def _face_angles(face: _Face, relation: dict[int, str | None], parent: int | None, free_total: int) -> list[int]:
    def contains(h: int) -> bool:
        if h == parent:
            return relation[face.fid] == AROUND
        return relation[h] == INSIDE

    angles = [2] * len(face.verts)
    for i, h in face.chord_of.items():
        angles[i] = 4 - face.own[i] if contains(h) else face.own[i]
    reflex = (free_total - len(face.free)) // 2
    for j, i in enumerate(face.free):
        angles[i] = 3 if j < reflex else 1
    return angles


def _dart_directions(emb: OuterplanarEmbedding, planner: _Planner, relation, free_total) -> list[int]:
    g = emb.graph
    dirs = [-1] * (2 * g.m)

    def put(d: int, direction: int) -> None:
        for dd, want in ((d, direction % 4), (d ^ 1, (direction + 2) % 4)):
            if dirs[dd] < 0:
                dirs[dd] = want
            elif dirs[dd] != want:
                raise ShapeError(f"dart {dd} gets directions {dirs[dd]} and {want}")

    flip = {planner.root: 1}
    for f in planner.order:
        p = planner.parent[f]
        if p is not None:
            flip[f] = flip[p] if relation[f] == SIDE else -flip[p]
        face = planner.faces[f]
        angles = _face_angles(face, relation, p, free_total[f])
        verts = face.verts
        k = len(verts)
        darts = [g.dart(verts[i], verts[(i + 1) % k]) for i in range(k)]
        start = next((i for i in range(k) if dirs[darts[i]] >= 0), 0)
        if dirs[darts[start]] < 0:
            put(darts[start], 1 if g.label(darts[start]) is Label.H else 0)
        cur = dirs[darts[start]]
        for step in range(1, k):
            i = (start + step) % k
            cur = (cur + flip[f] * (angles[i] - 2)) % 4
            put(darts[i], cur)
        if (cur + flip[f] * (angles[start] - 2)) % 4 != dirs[darts[start]]:
            raise ShapeError(f"face {verts} does not close")
    return dirs


def embedding_from_directions(g: LabeledGraph, dirs: list[int]) -> RotationSystem:
    """Rotation sorted by direction; the outer face is the one turning 2k+4."""
    adj = g.adjacency()
    rot = []
    for v in range(g.n):
        ds = sorted(adj[v], key=lambda d: dirs[d])
        if len({dirs[d] for d in ds}) != len(ds):
            raise ShapeError(f"two edges leave vertex {v} in the same direction")
        rot.append(tuple(ds))
    bare = RotationSystem(tuple(rot))
    fs = faces_from_rotation(g, bare)
    outer = []
    for f, darts in enumerate(fs.faces):
        total = 0
        for d in darts:
            a = (dirs[fs.next_dart[d]] - dirs[d ^ 1]) % 4
            total += a or 4
        if total == 2 * len(darts) + 4:
            outer.append(f)
    if len(outer) != 1:
        raise ShapeError(f"{len(outer)} faces turn like an outer face")
    return RotationSystem(bare.rotation, tuple(fs.vertex_walk(g, outer[0])))


def shape_embedding(emb: OuterplanarEmbedding) -> RotationSystem | None:
    """A plane embedding of the graph admitting a good drawing, or None."""
    planner = _Planner(emb)
    plan = planner.plan()
    if plan is None:
        return None
    relation, free_total = plan
    dirs = _dart_directions(emb, planner, relation, free_total)
    return embedding_from_directions(emb.graph, dirs)


def draw_outerplanar(g: LabeledGraph, search_limit: int = 1 << 16) -> Drawing:
    """Good drawing of a biconnected outerplanar graph.

    Maximum degree 3 goes through the condition check and face shaping.
    With degree-4 vertices, ``g`` is drawn by embedding search (at most
    ``search_limit`` rotation systems), the drawing's shape is carried over
    to the gadget graph, which is laid out and collapsed back.
    """
    emb = canonical_embedding(g)
    report = check_conditions(g, emb)
    if max(g.degree()) >= 4:
        # C1 and C2 characterise maximum degree 3 only; C3 still applies
        c3 = ConditionReport([v for v in report.violations if v.kind == "C3"])
        if not c3.ok:
            raise ConditionsViolated(c3)
        return _draw_with_gadgets(g, search_limit)
    if not report.ok:
        raise ConditionsViolated(report)
    rot = shape_embedding(emb)
    if rot is None:
        raise ShapeError("conditions hold but no face shapes were found")
    return draw_plane(g, rot)


def _draw_with_gadgets(g: LabeledGraph, search_limit: int) -> Drawing:
    found = search_drawing(g, search_limit)
    if found is None:
        raise NotDrawable("no embedding admits a drawing", None, f"searched all embeddings of {g.n} vertices")
    return draw_via_gadgets(g, found[0]).recovered


@dataclass(frozen=True)
class GadgetRun:
    graph: LabeledGraph  # the transformed graph
    maps: list
    drawing: Drawing  # plane-pipeline drawing of ``graph``
    recovered: Drawing  # drawing of the original graph


def draw_via_gadgets(g: LabeledGraph, shape: Drawing) -> GadgetRun:
    """Redraw ``g`` through its degree-3 gadget graph.

    ``shape`` is any good drawing of ``g``; only its edge directions are
    used.  The gadget graph is laid out by the plane pipeline and then
    collapsed back.
    """
    g2, maps = transform_degree4(g)
    dirs = [direction_between(shape[g.origin(d)], shape[g.head(d)]) for d in range(2 * g.m)]
    rot2 = embedding_from_directions(g2, expand_directions(g, dirs, g2, maps))
    d2 = draw_plane(g2, rot2)
    return GadgetRun(g2, maps, d2, recover_degree4_drawing(d2, maps, g))


# -- single faces ----------------------------------------------------------------


@dataclass(frozen=True)
class Flag:
    """Region reserved for one face drawing.

    ``banner`` is an axis-parallel rectangle ``(xmin, ymin, xmax, ymax)``;
    ``post`` is a second rectangle outside it or ``None`` when degenerate.
    ``borders`` are the two consecutive boundary segments (H then V) the
    face drawing hangs from.
    """

    banner: tuple[int, int, int, int]
    post: tuple[int, int, int, int] | None
    borders: tuple[Segment, Segment]

    def contains(self, p) -> bool:
        for box in (self.banner, self.post):
            if box is not None and box[0] <= p[0] <= box[2] and box[1] <= p[1] <= box[3]:
                return True
        return False


@dataclass(frozen=True)
class FaceDrawing:
    face: int
    points: dict[int, tuple[int, int]]  # original vertex id -> point
    flag: Flag


def _single_face_angles(face: _Face) -> list[int] | None:
    """Angles for the face on its own: per chord either own gaps or 4 minus them."""
    nbrs = sorted(face.chords)
    reach = {face.fixed_sum: ()}
    for h in nbrs:
        s = face.chords[h]
        nxt = {}
        for tot, picks in reach.items():
            for wrap in (False, True):
                nxt.setdefault(tot + (8 - s if wrap else s), picks + (wrap,))
        reach = nxt
    m = len(face.free)
    for tot in sorted(reach, key=lambda t: sum(reach[t])):
        if _free_fits(face.target - tot, m):
            wraps = dict(zip(nbrs, reach[tot]))
            angles = [2] * len(face.verts)
            for i, h in face.chord_of.items():
                angles[i] = 4 - face.own[i] if wraps[h] else face.own[i]
            reflex = (face.target - tot - m) // 2
            for j, i in enumerate(face.free):
                angles[i] = 3 if j < reflex else 1
            return angles
    return None


def draw_face(emb: OuterplanarEmbedding, f: int) -> FaceDrawing:
    """Good drawing of one inner face cycle, U-turns at its critical edges.

    Chord endpoints take the angles the face would have beside or around
    each neighbour, so both ends of a critical edge turn the same way.
    """
    from ..angle_flow import AngleAssignment
    from ..ortho_layout import realize
    from .embedding import segments

    face = _faces(emb)[f]
    angles = _single_face_angles(face)
    if angles is None:
        raise NotDrawable("face has no admissible shape", f"f{f}")
    k = len(face.verts)
    labs = emb.face_labels(f)
    cyc = LabeledGraph.build(k, [(i, (i + 1) % k, labs[i]) for i in range(k)])
    order = [[(i + 1) % k, (i - 1) % k] for i in range(k)]
    rot = RotationSystem.from_neighbors(cyc, order, outer_face=[(-i) % k for i in range(k)])
    fs = faces_from_rotation(cyc, rot, require_outer=True)
    inner = next(x for x in range(len(fs.faces)) if x != fs.outer)
    corner = [0] * (2 * k)
    for d in fs.faces[inner]:
        corner[d] = angles[cyc.head(d)]
    for d in fs.faces[fs.outer]:
        corner[d] = 4 - angles[cyc.head(d)]
    drawing = realize(cyc, fs, AngleAssignment(tuple(corner)))
    pts = {face.verts[i]: drawing[i] for i in range(k)}
    xs = [p[0] for p in drawing.points]
    ys = [p[1] for p in drawing.points]
    runs = segments(face.verts, labs)
    pair = next(
        (runs[i], runs[(i + 1) % len(runs)])
        for i in range(len(runs))
        if runs[i].label is Label.H and runs[(i + 1) % len(runs)].label is Label.V
    )
    return FaceDrawing(f, pts, Flag((min(xs), min(ys), max(xs), max(ys)), None, pair))
