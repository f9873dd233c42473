"""Angle assignment for HV-restricted plane graphs via unit-capacity flow.

Angles are integers counted in quarter turns (1 = 90 degrees ... 4 = 360).
Most corners are forced by the labels; the only choices left are the two
corners of each degree-2 vertex whose edges carry different labels, one of
which must be 1 and the other 3.  Each face knows how many of its free
corners must be 1, so picking them is a bipartite transportation problem:
faces supply quarter-turn corners, mixed degree-2 vertices demand exactly
one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .flow import Dinic
from .graph_core import FaceSet, LabeledGraph, RotationSystem, check_label_degrees, corners


class NotDrawable(Exception):
    """The instance has no good orthogonal drawing; ``stage`` names the failing test."""

    def __init__(self, stage: str, element: object = None, detail: str = "") -> None:
        self.stage = stage
        self.element = element
        self.detail = detail
        msg = stage if element is None else f"{stage} {element}"
        super().__init__(msg + (f" ({detail})" if detail else ""))


class InfeasibleFace(NotDrawable):
    def __init__(self, face: int, detail: str = "") -> None:
        super().__init__("infeasible face", f"f{face}", detail)
        self.face = face


class GlobalImbalance(NotDrawable):
    def __init__(self, supply: int, demand: int) -> None:
        super().__init__("global imbalance", None, f"supply {supply} != demand {demand}")


class Infeasible(NotDrawable):
    def __init__(self, flow: int, demand: int) -> None:
        super().__init__("infeasible flow", None, f"max flow {flow} < demand {demand}")


class AssignmentError(AssertionError):
    pass


class VertexSumViolation(AssignmentError):
    def __init__(self, v: int, total: int) -> None:
        super().__init__(f"angles around vertex {v} sum to {total}, expected 4")
        self.vertex = v


class FaceSumViolation(AssignmentError):
    def __init__(self, f: int, total: int, expected: int) -> None:
        super().__init__(f"angles in face {f} sum to {total}, expected {expected}")
        self.face = f


@dataclass(frozen=True)
class CornerClassification:
    fixed: dict[int, int]
    free: frozenset[int]
    sinks: tuple[int, ...]  # degree-2 vertices with mixed labels


@dataclass(frozen=True)
class FaceSupply:
    face: int
    free: int  # number of free corners on the face
    residual: int  # required face sum minus the fixed angles
    reflex: int  # free corners that must be 3
    convex: int  # free corners that must be 1


@dataclass(frozen=True)
class FlowNetwork:
    supplies: tuple[int, ...]  # per face, quarter-turn corners to hand out
    sinks: tuple[int, ...]
    arcs: tuple[tuple[int, int, int], ...]  # (corner, face, vertex)


@dataclass(frozen=True)
class AngleAssignment:
    angles: tuple[int, ...]  # indexed by corner id (incoming dart)

    def __getitem__(self, corner: int) -> int:
        return self.angles[corner]


def required_face_sum(faces: FaceSet, f: int) -> int:
    k = faces.degree(f)
    return 2 * k + 4 if faces.is_outer(f) else 2 * k - 4


def classify_corners(g: LabeledGraph, faces: FaceSet) -> CornerClassification:
    deg = g.degree()
    fixed: dict[int, int] = {}
    free = []
    sinks = set()
    for c in corners(g, faces):
        v = c.vertex
        if deg[v] == 1:
            fixed[c.id] = 4
        elif g.label(c.incoming) == g.label(c.outgoing):
            fixed[c.id] = 2
        elif deg[v] >= 3:
            fixed[c.id] = 1
        else:
            free.append(c.id)
            sinks.add(v)
    return CornerClassification(fixed, frozenset(free), tuple(sorted(sinks)))


def split_free_corners(residual: int, free: int) -> tuple[int, int]:
    """Solve 3*reflex + convex = residual, reflex + convex = free.

    Returns ``(reflex, convex)`` or raises ``ValueError`` when there is no
    nonnegative integral solution.
    """
    twice = residual - free
    if twice % 2:
        raise ValueError(f"odd residual: {residual} with {free} free corners")
    reflex = twice // 2
    convex = free - reflex
    if reflex < 0 or convex < 0:
        raise ValueError(f"no split of {free} free corners reaches {residual}")
    return reflex, convex


def face_supplies(g: LabeledGraph, faces: FaceSet, cls: CornerClassification) -> list[FaceSupply]:
    out = []
    for f, darts in enumerate(faces.faces):
        fixed_sum = sum(cls.fixed[d] for d in darts if d in cls.fixed)
        m = sum(1 for d in darts if d in cls.free)
        residual = required_face_sum(faces, f) - fixed_sum
        try:
            z, zp = split_free_corners(residual, m)
        except ValueError as exc:
            raise InfeasibleFace(f, str(exc)) from None
        out.append(FaceSupply(f, m, residual, z, zp))
    return out


def build_network(
    g: LabeledGraph, faces: FaceSet, supplies: list[FaceSupply], cls: CornerClassification
) -> FlowNetwork:
    total = sum(s.convex for s in supplies)
    if total != len(cls.sinks):
        raise GlobalImbalance(total, len(cls.sinks))
    arcs = tuple((c, faces.face_of[c], g.head(c)) for c in sorted(cls.free))
    return FlowNetwork(tuple(s.convex for s in supplies), cls.sinks, arcs)


def solve_flow(net: FlowNetwork) -> dict[int, int]:
    """Unit flow per free corner, or ``Infeasible``."""
    nf = len(net.supplies)
    sink_index = {v: i for i, v in enumerate(net.sinks)}
    s = nf + len(net.sinks)
    t = s + 1
    dinic = Dinic(t + 1)
    for f, sup in enumerate(net.supplies):
        if sup:
            dinic.add_edge(s, f, sup)
    arc_ids = []
    for corner, f, v in net.arcs:
        arc_ids.append((corner, dinic.add_edge(f, nf + sink_index[v], 1)))
    for i in range(len(net.sinks)):
        dinic.add_edge(nf + i, t, 1)
    value = dinic.max_flow(s, t)
    if value < len(net.sinks):
        raise Infeasible(value, len(net.sinks))
    return {corner: dinic.flow_on(a) for corner, a in arc_ids}


def assignment_from_flow(g: LabeledGraph, flow: dict[int, int], cls: CornerClassification) -> AngleAssignment:
    angles = [0] * (2 * g.m)
    for c, x in cls.fixed.items():
        angles[c] = x
    for c in cls.free:
        angles[c] = 3 - 2 * flow[c]
    return AngleAssignment(tuple(angles))


def verify_assignment(g: LabeledGraph, faces: FaceSet, a: AngleAssignment) -> None:
    around = [0] * g.n
    for c in range(2 * g.m):
        around[g.head(c)] += a[c]
    deg = g.degree()
    for v in range(g.n):
        if deg[v] and around[v] != 4:
            raise VertexSumViolation(v, around[v])
    for f, darts in enumerate(faces.faces):
        total = sum(a[d] for d in darts)
        want = required_face_sum(faces, f)
        if total != want:
            raise FaceSumViolation(f, total, want)


def assign_angles(g: LabeledGraph, rot: RotationSystem, faces: FaceSet) -> AngleAssignment:
    """Run the whole decision; raises a ``NotDrawable`` subclass on refusal."""
    report = check_label_degrees(g, rot)
    if not report.ok:
        bad = report.violations[0]
        raise NotDrawable("label-degree violation", f"v{bad.element}", bad.detail)
    cls = classify_corners(g, faces)
    supplies = face_supplies(g, faces, cls)
    net = build_network(g, faces, supplies, cls)
    flow = solve_flow(net)
    a = assignment_from_flow(g, flow, cls)
    verify_assignment(g, faces, a)
    return a
