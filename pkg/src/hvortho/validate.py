"""Independent geometric certification of drawings.

Reads only the graph, its labels, the points and (optionally) the rotation
system.  All predicates are exact: axis-parallel segments are closed boxes,
so two of them meet exactly when their boxes overlap.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass, field
from typing import Sequence

from .drawing import Drawing
from .graph_core import E, N, S, W, Label, LabeledGraph, RotationSystem


@dataclass
class ValidationReport:
    bad_labels: list[int] = field(default_factory=list)
    coincident: list[tuple[int, int]] = field(default_factory=list)
    crossings: list[tuple] = field(default_factory=list)
    rotation_mismatch: list = field(default_factory=list)
    lemma_bc_failures: list[tuple[int, int]] = field(default_factory=list)

    @property
    def labels_ok(self) -> bool:
        return not self.bad_labels

    @property
    def distinct_points_ok(self) -> bool:
        return not self.coincident

    @property
    def planarity_ok(self) -> bool:
        return not self.crossings

    @property
    def rotation_ok(self) -> bool:
        return not self.rotation_mismatch

    @property
    def lemma_bc_ok(self) -> bool:
        return not self.lemma_bc_failures

    @property
    def ok(self) -> bool:
        return (
            self.labels_ok
            and self.distinct_points_ok
            and self.planarity_ok
            and self.rotation_ok
            and self.lemma_bc_ok
        )

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "bad_labels": self.bad_labels,
            "coincident": [list(p) for p in self.coincident],
            "crossings": [list(p) for p in self.crossings],
            "rotation_mismatch": [list(p) if isinstance(p, tuple) else p for p in self.rotation_mismatch],
            "lemma_bc_failures": [list(p) for p in self.lemma_bc_failures],
        }

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        parts = []
        if self.bad_labels:
            parts.append(f"edges violating their label: {self.bad_labels}")
        if self.coincident:
            parts.append(f"coincident vertices: {self.coincident}")
        if self.crossings:
            parts.append(f"crossings: {self.crossings}")
        if self.rotation_mismatch:
            parts.append(f"rotation mismatch: {self.rotation_mismatch}")
        if self.lemma_bc_failures:
            parts.append(f"critical edges with neighbours on both sides: {self.lemma_bc_failures}")
        return "; ".join(parts)


def direction_between(p, q) -> int | None:
    """Compass direction from ``p`` to ``q``, or None if not axis-parallel."""
    dx = q[0] - p[0]
    dy = q[1] - p[1]
    if dx == 0 and dy > 0:
        return N
    if dx == 0 and dy < 0:
        return S
    if dy == 0 and dx > 0:
        return E
    if dy == 0 and dx < 0:
        return W
    return None


def _box(p, q):
    return (min(p[0], q[0]), max(p[0], q[0]), min(p[1], q[1]), max(p[1], q[1]))


def segments_meet(p1, q1, p2, q2):
    """Intersection box of two axis-parallel segments, or None."""
    a = _box(p1, q1)
    b = _box(p2, q2)
    lo_x, hi_x = max(a[0], b[0]), min(a[1], b[1])
    lo_y, hi_y = max(a[2], b[2]), min(a[3], b[3])
    if lo_x > hi_x or lo_y > hi_y:
        return None
    return lo_x, hi_x, lo_y, hi_y


def _cyclic_equal(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = list(b).index(a[0])
    except ValueError:
        return False
    return list(b[i:]) + list(b[:i]) == list(a)


def _signed_area2(pts: Sequence) -> object:
    total = 0
    k = len(pts)
    for i in range(k):
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % k]
        total += x1 * y2 - x2 * y1
    return total


def _edges_conflict(g: LabeledGraph, pts, e1: int, e2: int) -> bool:
    u1, v1, _ = g.edges[e1]
    u2, v2, _ = g.edges[e2]
    meet = segments_meet(pts[u1], pts[v1], pts[u2], pts[v2])
    if meet is None:
        return False
    shared = {u1, v1} & {u2, v2}
    if shared:
        (s,) = shared
        p = pts[s]
        return meet != (p[0], p[0], p[1], p[1])
    return True


def _vertex_on_edge(g: LabeledGraph, pts, w: int, e: int) -> bool:
    u, v, _ = g.edges[e]
    return w not in (u, v) and segments_meet(pts[u], pts[v], pts[w], pts[w]) is not None


def _crossings_all_pairs(g: LabeledGraph, pts) -> list:
    out: list = []
    for e1 in range(g.m):
        for e2 in range(e1 + 1, g.m):
            if _edges_conflict(g, pts, e1, e2):
                out.append((e1, e2))
        for w in range(g.n):
            if _vertex_on_edge(g, pts, w, e1):
                out.append(("vertex", w, e1))
    return out


def _sweep(spans, probes):
    """Pairs (span, probe) with a horizontal span hitting a vertical probe.

    ``spans`` holds (x_lo, x_hi, y, id) and ``probes`` holds (x, y_lo, y_hi, id);
    all intervals are closed.
    """
    starts = sorted(spans, key=lambda s: s[0])
    ends = sorted(spans, key=lambda s: s[1])
    active: list = []
    i = j = 0
    for x, lo, hi, pid in sorted(probes, key=lambda q: q[0]):
        while i < len(starts) and starts[i][0] <= x:
            insort(active, (starts[i][2], starts[i][3]))
            i += 1
        while j < len(ends) and ends[j][1] < x:
            active.remove((ends[j][2], ends[j][3]))
            j += 1
        k = bisect_left(active, (lo, -1))
        while k < len(active) and active[k][0] <= hi:
            yield active[k][1], pid
            k += 1


def _crossings_swept(g: LabeledGraph, pts) -> list:
    """Same result as the all-pairs scan, for axis-parallel edges only."""
    h_spans, v_spans = [], []
    for e, (u, v, _) in enumerate(g.edges):
        (x1, y1), (x2, y2) = pts[u], pts[v]
        if y1 == y2:
            h_spans.append((min(x1, x2), max(x1, x2), y1, e))
        else:
            v_spans.append((min(y1, y2), max(y1, y2), x1, e))
    pairs: set[tuple[int, int]] = set()
    # collinear overlaps: swap roles so the shared line becomes the probe axis
    for spans in (h_spans, v_spans):
        by_line: dict = {}
        for lo, hi, c, e in spans:
            by_line.setdefault(c, []).append((lo, hi, e))
        for segs in by_line.values():
            segs.sort()
            open_: list = []
            for lo, hi, e in segs:
                open_ = [(h, f) for h, f in open_ if h >= lo]
                pairs.update((min(e, f), max(e, f)) for _, f in open_)
                open_.append((hi, e))
    v_probes = [(c, lo, hi, e) for lo, hi, c, e in v_spans]
    pairs.update((min(a, b), max(a, b)) for a, b in _sweep(h_spans, v_probes))
    hits: set[tuple[int, int]] = set()
    points = [(x, y, y, w) for w, (x, y) in enumerate(pts)]
    hits.update(_sweep(h_spans, points))
    # transpose to test vertices against vertical edges
    hits.update(_sweep(v_spans, [(y, x, x, w) for w, (x, y) in enumerate(pts)]))
    found = [(e1, 0, e2) for e1, e2 in pairs if _edges_conflict(g, pts, e1, e2)]
    found += [(e, 1, w) for e, w in hits if _vertex_on_edge(g, pts, w, e)]
    found.sort()
    return [(a, b) if kind == 0 else ("vertex", b, a) for a, kind, b in found]


def validate_drawing(
    g: LabeledGraph,
    d: Drawing,
    rot: RotationSystem | None = None,
    allow_mirror: bool = False,
) -> ValidationReport:
    rep = ValidationReport()
    pts = d.points
    if len(pts) != g.n:
        raise ValueError(f"drawing has {len(pts)} points for {g.n} vertices")

    for e, (u, v, lab) in enumerate(g.edges):
        direction = direction_between(pts[u], pts[v])
        if direction is None or (direction in (E, W)) != (lab is Label.H):
            rep.bad_labels.append(e)

    where: dict = {}
    for v, p in enumerate(pts):
        if p in where:
            rep.coincident.append((where[p], v))
        else:
            where[p] = v

    axis = all(direction_between(pts[u], pts[v]) is not None for u, v, _ in g.edges)
    rep.crossings.extend(_crossings_swept(g, pts) if axis else _crossings_all_pairs(g, pts))

    if rot is not None:
        rep.rotation_mismatch.extend(_rotation_mismatches(g, pts, rot, allow_mirror))
    return rep


def _geometric_rotation(g: LabeledGraph, pts, v: int, darts: Sequence[int]) -> list[int] | None:
    keyed = []
    for dart in darts:
        direction = direction_between(pts[v], pts[g.head(dart)])
        if direction is None:
            return None
        keyed.append((direction, dart))
    keyed.sort()
    return [dart for _, dart in keyed]


def _rotation_mismatches(g: LabeledGraph, pts, rot: RotationSystem, allow_mirror: bool) -> list:
    def check(r: RotationSystem, clockwise_outer: bool) -> list:
        bad: list = []
        for v in range(g.n):
            geo = _geometric_rotation(g, pts, v, r.rotation[v])
            if geo is None or not _cyclic_equal(list(r.rotation[v]), geo):
                bad.append(v)
        if r.outer_face is not None and len(r.outer_face) >= 3:
            area = _signed_area2([pts[v] for v in r.outer_face])
            if area != 0 and (area < 0) != clockwise_outer:
                bad.append(("outer", tuple(r.outer_face)))
        return bad

    direct = check(rot, True)
    if not direct or not allow_mirror:
        return direct
    mirrored = check(RotationSystem(tuple(tuple(reversed(x)) for x in rot.rotation), rot.outer_face), False)
    return [] if not mirrored else direct


class NotCritical(ValueError):
    pass


def is_critical_shape(g: LabeledGraph, face: Sequence[int], i: int) -> bool:
    """Label pattern of a critical edge: both neighbours share the other label.

    ``face`` is a cyclic vertex list; the edge runs from ``face[i]`` to
    ``face[i+1]``.  Whether the edge is inner is the caller's concern.
    """
    k = len(face)
    idx = g.edge_index()

    def lab(a: int, b: int) -> Label:
        return g.edges[idx[frozenset((a, b))]][2]

    mid = lab(face[i], face[(i + 1) % k])
    before = lab(face[i - 1], face[i])
    after = lab(face[(i + 1) % k], face[(i + 2) % k])
    return before == after != mid


def check_lemma_bc(g: LabeledGraph, d: Drawing, face: Sequence[int], i: int) -> bool:
    """Neighbours of the critical edge ``face[i], face[i+1]`` lie on one side of it."""
    if not is_critical_shape(g, face, i):
        raise NotCritical(f"edge ({face[i]}, {face[(i + 1) % len(face)]}) is not critical in this face")
    k = len(face)
    a, b, c, e = face[i - 1], face[i], face[(i + 1) % k], face[(i + 2) % k]
    pa, pb, pc, pe = d[a], d[b], d[c], d[e]
    axis = 0 if pb[0] == pc[0] else 1  # vertical critical edge: compare x
    s1 = (pa[axis] > pb[axis]) - (pa[axis] < pb[axis])
    s2 = (pe[axis] > pc[axis]) - (pe[axis] < pc[axis])
    return s1 != 0 and s1 == s2


def rotation_from_drawing(g: LabeledGraph, d: Drawing | Sequence) -> RotationSystem:
    """The rotation system realised by a drawing, with its outer walk.

    Darts around a vertex are sorted clockwise from north; the outer face
    is the walk of most negative signed area (the only clockwise one).
    """
    from .graph_core import faces_from_rotation

    pts = d.points if isinstance(d, Drawing) else d
    adj = g.adjacency()
    rot = []
    for v in range(g.n):
        keyed = []
        for dart in adj[v]:
            direction = direction_between(pts[v], pts[g.head(dart)])
            if direction is None:
                raise ValueError(f"dart {dart} is not axis-parallel")
            keyed.append((direction, dart))
        rot.append(tuple(dart for _, dart in sorted(keyed)))
    bare = RotationSystem(tuple(rot))
    fs = faces_from_rotation(g, bare)
    walks = [fs.vertex_walk(g, f) for f in range(len(fs.faces))]
    outer = min(walks, key=lambda w: _signed_area2([pts[v] for v in w]))
    return RotationSystem(bare.rotation, tuple(outer))
