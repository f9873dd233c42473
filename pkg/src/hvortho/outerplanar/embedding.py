"""Canonical outerplanar embedding and the face statistics built on it.

The outer boundary of a biconnected outerplanar graph is a Hamiltonian
cycle.  Listing its vertices counter-clockwise on a convex polygon fixes the
only embedding with every vertex on the outer face.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from ..graph_core import (
    FaceSet,
    GraphError,
    Label,
    LabeledGraph,
    RotationSystem,
    faces_from_rotation,
    validate_graph,
)


class NotBiconnected(GraphError):
    pass


class NotOuterplanar(GraphError):
    pass


def to_networkx(g: LabeledGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for u, v, _ in g.edges)
    return h


def outer_cycle(g: LabeledGraph) -> list[int]:
    """Vertices in order along the outer boundary; raises on bad input."""
    validate_graph(g)
    h = to_networkx(g)
    if g.n < 3 or not nx.is_biconnected(h):
        raise NotBiconnected("outerplanar mode needs a biconnected graph with at least 3 vertices")
    apex = g.n
    h.add_edges_from((apex, v) for v in range(g.n))
    planar, emb = nx.check_planarity(h)
    if not planar:
        raise NotOuterplanar("graph is not outerplanar")
    order = list(emb.neighbors_cw_order(apex))
    start = order.index(0)
    return order[start:] + order[:start]


@dataclass(frozen=True)
class OuterplanarEmbedding:
    graph: LabeledGraph
    cycle: tuple[int, ...]  # counter-clockwise along the outer boundary
    rotation: RotationSystem
    faces: FaceSet
    inner: tuple[int, ...]  # face ids of the inner faces

    def is_outer_edge(self, u: int, v: int) -> bool:
        k = len(self.cycle)
        i = self.position[u]
        j = self.position[v]
        return (i - j) % k in (1, k - 1)

    @property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.cycle)}

    def face_vertices(self, f: int) -> list[int]:
        return self.faces.vertex_walk(self.graph, f)

    def face_labels(self, f: int) -> list[Label]:
        return [self.graph.label(d) for d in self.faces.faces[f]]

    def chords(self) -> list[int]:
        pos = self.position
        k = len(self.cycle)
        return [
            e
            for e, (u, v, _) in enumerate(self.graph.edges)
            if (pos[u] - pos[v]) % k not in (1, k - 1)
        ]

    def dual_tree(self) -> dict[int, list[tuple[int, int]]]:
        """Inner face -> [(neighbour face, shared chord edge id)]."""
        adj: dict[int, list[tuple[int, int]]] = {f: [] for f in self.inner}
        for e in self.chords():
            f1 = self.faces.face_of[2 * e]
            f2 = self.faces.face_of[2 * e + 1]
            adj[f1].append((f2, e))
            adj[f2].append((f1, e))
        return adj


def canonical_embedding(g: LabeledGraph) -> OuterplanarEmbedding:
    cyc = outer_cycle(g)
    k = len(cyc)
    pos = {v: i for i, v in enumerate(cyc)}
    # On a convex polygon listed counter-clockwise, the clockwise order at a
    # vertex is by decreasing counter-clockwise offset of the neighbour.
    order = [sorted(g.neighbors(v), key=lambda w, v=v: -((pos[w] - pos[v]) % k)) for v in range(g.n)]
    outer = [cyc[0]] + cyc[:0:-1]
    rot = RotationSystem.from_neighbors(g, order, outer_face=outer)
    faces = faces_from_rotation(g, rot, require_outer=True)
    inner = tuple(f for f in range(len(faces.faces)) if f != faces.outer)
    return OuterplanarEmbedding(g, tuple(cyc), rot, faces, inner)


# -- segments and statistics ---------------------------------------------------


@dataclass(frozen=True)
class Segment:
    """A maximal run of same-label edges along a face boundary."""

    label: Label
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def segments(vertices: Sequence[int], labels: Sequence[Label]) -> list[Segment]:
    """Maximal runs of a cyclic boundary; ``labels[i]`` labels edge i -> i+1.

    A boundary of a single label yields one segment covering it.
    """
    k = len(vertices)
    if k == 0:
        return []
    start = next((i for i in range(k) if labels[i] != labels[i - 1]), None)
    if start is None:
        return [Segment(labels[0], tuple(vertices) + (vertices[0],))]
    out = []
    i = start
    while True:
        lab = labels[i]
        run = [vertices[i]]
        while True:
            run.append(vertices[(i + 1) % k])
            i = (i + 1) % k
            if labels[i] != lab or i == start:
                break
        out.append(Segment(lab, tuple(run)))
        if i == start:
            return out


@dataclass(frozen=True)
class FaceStats:
    face: int
    e_v: int
    e_h: int
    c_v: int
    c_h: int
    critical: tuple[int, ...]  # positions i of critical edges face[i] -> face[i+1]


def critical_positions(labels: Sequence[Label], inner: Sequence[bool]) -> list[int]:
    k = len(labels)
    return [
        i
        for i in range(k)
        if inner[i] and labels[i - 1] == labels[(i + 1) % k] != labels[i]
    ]


def face_stats(emb: OuterplanarEmbedding, f: int) -> FaceStats:
    verts = emb.face_vertices(f)
    labs = emb.face_labels(f)
    k = len(verts)
    inner = [not emb.is_outer_edge(verts[i], verts[(i + 1) % k]) for i in range(k)]
    crit = critical_positions(labs, inner)
    return FaceStats(
        face=f,
        e_v=labs.count(Label.V),
        e_h=labs.count(Label.H),
        c_v=sum(1 for i in crit if labs[i] is Label.V),
        c_h=sum(1 for i in crit if labs[i] is Label.H),
        critical=tuple(crit),
    )
