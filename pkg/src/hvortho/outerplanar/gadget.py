"""Replacing degree-4 vertices by a degree-3 gadget, and undoing it on drawings.

A degree-4 vertex ``v`` (two H and two V edges) becomes

* a vertical path ``b - b' - v' - v'' - d' - d``;
* an alternating 4-cycle ``b' - a - a'' - v''``;
* an alternating 4-cycle ``v' - c'' - c - d'``.

The two cycles interleave along the path, so they cannot lie on the same
side of it: the edge ``v' - c''`` would start on the boundary of the first
rectangle and ``c'' - c`` would have to leave it through its bottom edge.

The external V edges attach at ``b`` and ``d``, the H edges at ``a`` and
``c``.  The id of ``v`` is reused for ``v'`` so the original vertex ids
survive; all other gadget vertices are appended.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..drawing import Drawing
from ..graph_core import GraphError, Label, LabeledGraph

PATH = ("b", "b1", "v1", "v2", "d1", "d")  # b, b', v', v'', d', d
INTERNAL = (
    ("b", "b1", Label.V),
    ("b1", "v1", Label.V),
    ("v1", "v2", Label.V),
    ("v2", "d1", Label.V),
    ("d1", "d", Label.V),
    ("b1", "a", Label.H),
    ("a", "a2", Label.V),
    ("a2", "v2", Label.H),
    ("v1", "c2", Label.H),
    ("c2", "c", Label.V),
    ("c", "d1", Label.H),
)


class NonAlternatingDegree4(GraphError):
    pass


@dataclass(frozen=True)
class GadgetMap:
    vertex: int  # the replaced vertex (its id now names v')
    ids: dict[str, int]  # gadget role -> vertex id in the transformed graph
    external: dict[str, int]  # attachment role ("b", "d", "a", "c") -> original edge id


def transform_degree4(g: LabeledGraph) -> tuple[LabeledGraph, list[GadgetMap]]:
    deg = g.degree()
    if max(deg, default=0) > 4:
        raise GraphError("vertices of degree above 4 cannot be drawn orthogonally")
    heavy = [v for v in range(g.n) if deg[v] == 4]
    if not heavy:
        return g, []
    incident: dict[int, list[int]] = {v: [] for v in heavy}
    for e, (u, v, _) in enumerate(g.edges):
        for x in (u, v):
            if x in incident:
                incident[x].append(e)
    n = g.n
    maps = []
    attach: dict[tuple[int, int], int] = {}  # (edge, original endpoint) -> new endpoint
    for v in heavy:
        hs = [e for e in incident[v] if g.edges[e][2] is Label.H]
        vs = [e for e in incident[v] if g.edges[e][2] is Label.V]
        if len(hs) != 2:
            raise NonAlternatingDegree4(f"vertex {v} has {len(hs)} horizontal and {len(vs)} vertical edges")
        ids = {"v1": v}
        for role in ("b", "b1", "v2", "d1", "d", "a", "a2", "c", "c2"):
            ids[role] = n
            n += 1
        external = {"b": vs[0], "d": vs[1], "a": hs[0], "c": hs[1]}
        for role, e in external.items():
            attach[(e, v)] = ids[role]
        maps.append(GadgetMap(v, ids, external))
    edges = []
    for e, (u, v, lab) in enumerate(g.edges):
        edges.append((attach.get((e, u), u), attach.get((e, v), v), lab))
    for gm in maps:
        edges.extend((gm.ids[x], gm.ids[y], lab) for x, y, lab in INTERNAL)
    return LabeledGraph(n, tuple(edges)), maps


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def recover_degree4_drawing(d: Drawing, maps: list[GadgetMap], original: LabeledGraph) -> Drawing:
    """Collapse every gadget of a good drawing back to a single vertex."""
    pts = [(Fraction(x), Fraction(y)) for x, y in d.points]
    alive = [True] * len(pts)
    for gm in maps:
        ids = gm.ids
        xp = pts[ids["b"]][0]
        ya = pts[ids["a"]][1]
        yc = pts[ids["c"]][1]
        side = _sign(pts[ids["a"]][0] - xp)
        if ya != yc:
            s = _sign(ya - yc)
            beyond = [p[1] for i, p in enumerate(pts) if alive[i] and _sign(yc - p[1]) == s]
            y_next = max(beyond, key=lambda y: s * y) if beyond else yc - s
            y_line = (yc + y_next) / 2
            scale = (yc - y_line) / (ya - y_line)
            lo, hi = sorted((y_line, ya))
            for i, (x, y) in enumerate(pts):
                if alive[i] and _sign(x - xp) == side and lo <= y <= hi:
                    pts[i] = (x, y_line + (y - y_line) * scale)
        for role, vid in ids.items():
            if role != "v1":
                alive[vid] = False
        pts[gm.vertex] = (xp, yc)
    kept = [pts[v] for v in range(original.n)]
    return Drawing(original, tuple(kept)).normalized()


def expand_directions(g: LabeledGraph, dirs: list[int], g2: LabeledGraph, maps: list[GadgetMap]) -> list[int]:
    """Dart directions of the transformed graph from those of ``g``.

    External edges keep their direction; each gadget is laid out with its
    path along the vertical through ``v`` and ``a`` on the side of the H
    neighbour it inherits.
    """
    out = [-1] * (2 * g2.m)
    for d in range(2 * g.m):
        out[d] = dirs[d]  # edges of g keep their ids in g2
    for gm in maps:
        v = gm.vertex

        def leaving(e: int) -> int:
            u, w, _ = g.edges[e]
            return dirs[2 * e] if u == v else dirs[2 * e + 1]

        down = (leaving(gm.external["b"]) + 2) % 4  # from b towards d
        toward_a = leaving(gm.external["a"])
        toward_c = (toward_a + 2) % 4
        want = {
            ("b", "b1"): down,
            ("b1", "v1"): down,
            ("v1", "v2"): down,
            ("v2", "d1"): down,
            ("d1", "d"): down,
            ("b1", "a"): toward_a,
            ("a", "a2"): down,
            ("a2", "v2"): toward_c,
            ("v1", "c2"): toward_c,
            ("c2", "c"): down,
            ("c", "d1"): toward_a,
        }
        for (x, y), direction in want.items():
            d = g2.dart(gm.ids[x], gm.ids[y])
            out[d] = direction
            out[d ^ 1] = (direction + 2) % 4
    return out
