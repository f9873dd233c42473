"""Labeled graphs, half-edge rotation systems, faces and corners.

Darts are numbered ``2*e`` (u -> v) and ``2*e + 1`` (v -> u) for edge
``e = (u, v)``, so ``twin(d) == d ^ 1``.  Rotations list the darts leaving
a vertex in clockwise order (y axis pointing up).  Face traversal follows
``next(d) = clockwise successor of twin(d)`` around ``head(d)``, which keeps
the face on the left; inner faces are walked counter-clockwise and the outer
face clockwise.

A corner is identified with the dart that *enters* it: corner ``d`` sits at
``head(d)`` between the incoming dart ``d`` and the outgoing dart ``next(d)``.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class Label(str, enum.Enum):
    H = "H"
    V = "V"

    @property
    def other(self) -> "Label":
        return Label.V if self is Label.H else Label.H


# Compass directions, numbered clockwise.
N, E, S, W = 0, 1, 2, 3
DIRECTION_NAMES = "NESW"


def opposite(direction: int) -> int:
    return (direction + 2) % 4


def direction_label(direction: int) -> Label:
    return Label.V if direction % 2 == 0 else Label.H


class GraphError(ValueError):
    """Malformed input graph or embedding."""


class SelfLoop(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class BadVertexId(GraphError):
    pass


class NonPlanarRotation(GraphError):
    pass


class MissingOuterFace(GraphError):
    pass


class Disconnected(GraphError):
    pass


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph with an H/V label on every edge."""

    n: int
    edges: tuple[tuple[int, int, Label], ...]

    @classmethod
    def build(cls, n: int, edges: Iterable[tuple[int, int, str | Label]]) -> "LabeledGraph":
        return cls(n, tuple((int(u), int(v), Label(lab)) for u, v, lab in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Outgoing darts per vertex, in edge order."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for e, (u, v, _) in enumerate(self.edges):
            adj[u].append(2 * e)
            adj[v].append(2 * e + 1)
        return adj

    def neighbors(self, v: int) -> list[int]:
        return [self.head(d) for d in self.adjacency()[v]]

    def degree(self) -> list[int]:
        deg = [0] * self.n
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def origin(self, d: int) -> int:
        u, v, _ = self.edges[d >> 1]
        return v if d & 1 else u

    def head(self, d: int) -> int:
        u, v, _ = self.edges[d >> 1]
        return u if d & 1 else v

    def label(self, d_or_e: int, *, dart: bool = True) -> Label:
        return self.edges[d_or_e >> 1 if dart else d_or_e][2]

    @functools.cached_property
    def _edge_index(self) -> dict[frozenset[int], int]:
        return {frozenset((u, v)): e for e, (u, v, _) in enumerate(self.edges)}

    def edge_index(self) -> dict[frozenset[int], int]:
        """Edge id by endpoint pair (cached; do not mutate)."""
        return self._edge_index

    def dart(self, u: int, v: int) -> int:
        """Dart from u to v."""
        e = self.edge_index()[frozenset((u, v))]
        return 2 * e if self.edges[e][0] == u else 2 * e + 1

    def with_labels(self, labels: Sequence[Label | str]) -> "LabeledGraph":
        return LabeledGraph(self.n, tuple((u, v, Label(l)) for (u, v, _), l in zip(self.edges, labels)))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        adj = self.adjacency()
        while stack:
            x = stack.pop()
            for d in adj[x]:
                y = self.head(d)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n


def twin(d: int) -> int:
    return d ^ 1


def validate_graph(g: LabeledGraph) -> None:
    seen: dict[frozenset[int], int] = {}
    for e, (u, v, lab) in enumerate(g.edges):
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise BadVertexId(f"edge {e} ({u}, {v}) references a vertex outside 0..{g.n - 1}")
        if u == v:
            raise SelfLoop(f"edge {e} ({u}, {v}, {lab.value}) is a self-loop")
        key = frozenset((u, v))
        if key in seen:
            raise ParallelEdge(f"edges {seen[key]} and {e} both join {u} and {v}")
        seen[key] = e


@dataclass(frozen=True)
class RotationSystem:
    """Clockwise dart order around each vertex plus an optional outer face.

    ``outer_face`` is the vertex walk of the outer face in traversal order
    (the order :func:`faces_from_rotation` produces, i.e. clockwise).
    """

    rotation: tuple[tuple[int, ...], ...]
    outer_face: tuple[int, ...] | None = None

    @classmethod
    def from_neighbors(
        cls,
        g: LabeledGraph,
        order: Sequence[Sequence[int]],
        outer_face: Sequence[int] | None = None,
    ) -> "RotationSystem":
        idx = g.edge_index()
        rot = []
        for v in range(g.n):
            nbrs = list(order[v]) if v < len(order) else []
            if sorted(nbrs) != sorted(g.neighbors(v)):
                raise GraphError(f"rotation at vertex {v} lists {nbrs}, neighbors are {sorted(g.neighbors(v))}")
            darts = []
            for w in nbrs:
                e = idx[frozenset((v, w))]
                darts.append(2 * e if g.edges[e][0] == v else 2 * e + 1)
            rot.append(tuple(darts))
        return cls(tuple(rot), tuple(outer_face) if outer_face is not None else None)

    def neighbor_lists(self, g: LabeledGraph) -> list[list[int]]:
        return [[g.head(d) for d in darts] for darts in self.rotation]

    def successor_map(self) -> dict[int, int]:
        """Clockwise successor of every dart around its origin."""
        succ = {}
        for darts in self.rotation:
            k = len(darts)
            for i, d in enumerate(darts):
                succ[d] = darts[(i + 1) % k]
        return succ

    def mirrored(self) -> "RotationSystem":
        outer = tuple(reversed(self.outer_face)) if self.outer_face is not None else None
        return RotationSystem(tuple(tuple(reversed(r)) for r in self.rotation), outer)


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[int, ...], ...]
    outer: int | None
    face_of: tuple[int, ...]
    next_dart: tuple[int, ...]

    def is_outer(self, f: int) -> bool:
        return f == self.outer

    def degree(self, f: int) -> int:
        return len(self.faces[f])

    def vertex_walk(self, g: LabeledGraph, f: int) -> list[int]:
        return [g.origin(d) for d in self.faces[f]]


def _components(g: LabeledGraph) -> int:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges:
        parent[find(u)] = find(v)
    return len({find(x) for x in range(g.n)})


def _match_walk(walk: Sequence[int], target: Sequence[int]) -> bool:
    if len(walk) != len(target):
        return False
    k = len(walk)
    for s in range(k):
        if all(walk[(s + i) % k] == target[i] for i in range(k)):
            return True
    return False


def faces_from_rotation(g: LabeledGraph, rot: RotationSystem, require_outer: bool = False) -> FaceSet:
    """Partition the darts into faces; checks Euler's formula.

    The outer face is located by matching ``rot.outer_face`` against the
    vertex walks (exact cyclic match).
    """
    if len(rot.rotation) != g.n:
        raise GraphError("rotation must list every vertex")
    seen = sorted(d for darts in rot.rotation for d in darts)
    if seen != list(range(2 * g.m)):
        raise GraphError("rotation does not cover every dart exactly once")
    for v, darts in enumerate(rot.rotation):
        for d in darts:
            if g.origin(d) != v:
                raise GraphError(f"dart {d} listed at vertex {v} but leaves {g.origin(d)}")
    succ = rot.successor_map()
    nxt = [0] * (2 * g.m)
    for d in range(2 * g.m):
        nxt[d] = succ[d ^ 1]
    face_of = [-1] * (2 * g.m)
    faces = []
    for d0 in range(2 * g.m):
        if face_of[d0] >= 0:
            continue
        cyc = []
        d = d0
        while face_of[d] < 0:
            face_of[d] = len(faces)
            cyc.append(d)
            d = nxt[d]
        faces.append(tuple(cyc))
    isolated = sum(1 for darts in rot.rotation if not darts)
    comps = _components(g)
    # Isolated vertices contribute a component but no face.
    if g.n - g.m + len(faces) + isolated != 1 + comps:
        raise NonPlanarRotation(
            f"Euler check failed: V={g.n} E={g.m} F={len(faces)} components={comps}"
        )
    outer = None
    if rot.outer_face is not None:
        for f, cyc in enumerate(faces):
            if _match_walk([g.origin(d) for d in cyc], rot.outer_face):
                outer = f
                break
        if outer is None:
            raise MissingOuterFace(f"no face has boundary walk {list(rot.outer_face)}")
    elif require_outer:
        raise MissingOuterFace("plane mode needs an outer face designation")
    return FaceSet(tuple(faces), outer, tuple(face_of), tuple(nxt))


@dataclass(frozen=True)
class Corner:
    vertex: int
    face: int
    incoming: int
    outgoing: int

    @property
    def id(self) -> int:
        return self.incoming


def corners(g: LabeledGraph, faces: FaceSet) -> list[Corner]:
    """One corner per dart, indexed by its incoming dart."""
    return [
        Corner(g.head(d), faces.face_of[d], d, faces.next_dart[d])
        for d in range(2 * g.m)
    ]


@dataclass(frozen=True)
class Violation:
    kind: str
    element: object
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.kind} at {self.element}" + (f": {self.detail}" if self.detail else "")


@dataclass
class ConditionReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, element: object, detail: str = "") -> None:
        self.violations.append(Violation(kind, element, detail))

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"kind": v.kind, "element": v.element, "detail": v.detail} for v in self.violations
            ],
        }


def label_degree_violations(g: LabeledGraph, rot: RotationSystem | None = None) -> ConditionReport:
    """At most two H and two V edges per vertex; degree-4 labels alternate.

    Without a rotation only the counting part is checked.
    """
    report = ConditionReport()
    adj = g.adjacency()
    for v in range(g.n):
        labs = [g.label(d) for d in (rot.rotation[v] if rot is not None else adj[v])]
        nh = labs.count(Label.H)
        nv = len(labs) - nh
        if nh > 2:
            report.add("label-degree", v, f"{nh} horizontal edges")
        if nv > 2:
            report.add("label-degree", v, f"{nv} vertical edges")
        if rot is not None and len(labs) == 4 and nh == 2:
            if labs[0] == labs[1] or labs[1] == labs[2]:
                report.add("label-degree", v, "degree-4 labels do not alternate")
    return report


def check_label_degrees(g: LabeledGraph, rot: RotationSystem) -> ConditionReport:
    return label_degree_violations(g, rot)
