"""Turn a verified angle assignment into integer coordinates.

Pipeline: propagate compass directions along faces, refine every face into
rectangles by adding dummy edges at reflex corners (the outer face is first
wrapped in a frame), then compact with longest-path layering on the classes
of vertices forced to share an x (vertical edges) or a y (horizontal edges).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .angle_flow import AngleAssignment, assign_angles
from .drawing import Drawing, normalize_points
from .graph_core import (
    E,
    N,
    Disconnected,
    FaceSet,
    GraphError,
    LabeledGraph,
    Label,
    RotationSystem,
    direction_label,
    faces_from_rotation,
    opposite,
    validate_graph,
)


class InconsistentPropagation(AssertionError):
    pass


class CyclicConstraint(AssertionError):
    pass


def orient_darts(g: LabeledGraph, faces: FaceSet, a: AngleAssignment) -> list[int]:
    """Compass direction of every dart (0=N, 1=E, 2=S, 3=W)."""
    dirs = [-1] * (2 * g.m)
    for seed in range(2 * g.m):
        if dirs[seed] >= 0:
            continue
        dirs[seed] = E if g.label(seed) is Label.H else N
        queue = deque([seed])
        while queue:
            d = queue.popleft()
            # after the corner at head(d) the walk turns left by 2 - angle
            for nd, want in ((faces.next_dart[d], (dirs[d] + a[d] - 2) % 4), (d ^ 1, opposite(dirs[d]))):
                if dirs[nd] < 0:
                    dirs[nd] = want
                    queue.append(nd)
                elif dirs[nd] != want:
                    raise InconsistentPropagation(f"dart {nd} gets directions {dirs[nd]} and {want}")
    for d in range(2 * g.m):
        if direction_label(dirs[d]) is not g.label(d):
            raise InconsistentPropagation(f"dart {d} labelled {g.label(d).value} points {dirs[d]}")
    return dirs


class _Ortho:
    """Mutable half-edge structure where every dart has a compass direction."""

    def __init__(self, n: int, ends: list[tuple[int, int]], dirs: list[int]) -> None:
        self.n_original = n
        self.n = n
        self.origin: list[int] = []
        self.dirs: list[int] = []
        self.at: list[list[int]] = [[-1] * 4 for _ in range(n)]
        self.dummy_on_edge: list[bool] = [False] * n
        for e, (u, v) in enumerate(ends):
            self.origin += [u, v]
            self.dirs += [dirs[2 * e], dirs[2 * e + 1]]
            self.at[u][dirs[2 * e]] = 2 * e
            self.at[v][dirs[2 * e + 1]] = 2 * e + 1
        self.original_darts = len(self.origin)

    def head(self, d: int) -> int:
        return self.origin[d ^ 1]

    def add_vertex(self, on_edge: bool = False) -> int:
        self.at.append([-1] * 4)
        self.dummy_on_edge.append(on_edge)
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, v: int, direction: int) -> int:
        d = len(self.origin)
        back = opposite(direction)
        if self.at[u][direction] >= 0 or self.at[v][back] >= 0:
            raise AssertionError("port already taken")
        self.origin += [u, v]
        self.dirs += [direction, back]
        self.at[u][direction] = d
        self.at[v][back] = d + 1
        return d

    def split(self, f: int) -> tuple[int, int]:
        """Subdivide the edge of dart ``f``; returns (new vertex, dart new->head)."""
        y = self.head(f)
        w = self.add_vertex(on_edge=True)
        fb = f ^ 1
        g = len(self.origin)
        self.origin += [w, y]
        self.dirs += [self.dirs[f], self.dirs[fb]]
        self.at[y][self.dirs[fb]] = g + 1
        self.origin[fb] = w
        self.at[w][self.dirs[fb]] = fb
        self.at[w][self.dirs[f]] = g
        return w, g

    def angle(self, d: int) -> int:
        v = self.head(d)
        r = self.dirs[d ^ 1]
        for k in range(1, 5):
            if self.at[v][(r + k) % 4] >= 0:
                return k
        raise AssertionError("unreachable")

    def next(self, d: int) -> int:
        v = self.head(d)
        r = self.dirs[d ^ 1]
        for k in range(1, 5):
            nd = self.at[v][(r + k) % 4]
            if nd >= 0:
                return nd
        raise AssertionError("unreachable")

    def walk(self, start: int) -> list[int]:
        out = [start]
        d = self.next(start)
        while d != start:
            out.append(d)
            d = self.next(d)
        return out

    # -- refinement -------------------------------------------------------

    def _cut(self, into: int, follow: int, front: int) -> tuple[int, int]:
        """Close a rectangle from the reflex corner entered by ``into``.

        ``follow`` leaves that corner; ``front`` is the dart after the second
        convex corner.  Returns (new dart from the corner, front remainder).
        """
        v = self.head(into)
        direction = (self.dirs[follow] - 1) % 4
        w, rest = self.split(front)
        cut = self.add_edge(v, w, direction)
        return cut, rest

    def _reduce_pass(self, start: int) -> tuple[bool, int]:
        """One linear sweep over the face of ``start``.

        Returns (whether reflex corners remain, a dart on the remaining face
        entering a leftover reflex corner, or ``start``).
        """
        darts = self.walk(start)
        # stack entries: [incoming dart, turn, outgoing dart]
        stack: list[list[int]] = []
        for i in range(len(darts) - 1):
            prev, cur = darts[i], darts[i + 1]
            turn = 2 - self.angle(prev)
            if turn == 0:
                continue
            stack.append([prev, turn, cur])
            while (
                len(stack) >= 3
                and stack[-1][1] == 1
                and stack[-2][1] == 1
                and stack[-3][1] < 0
            ):
                into, t, follow = stack[-3]
                front = stack[-1][2]
                del stack[-3:]
                cut, rest = self._cut(into, follow, front)
                if t + 1:
                    stack.append([into, t + 1, cut])
                stack.append([cut, 1, rest])
                darts[i + 1] = rest
        remaining = [e for e in stack if e[1] < 0]
        if remaining:
            return True, remaining[0][0]
        # the wrap-around corner was not part of the sweep
        if 2 - self.angle(darts[-1]) < 0:
            return True, darts[-1]
        return False, start

    def reduce_face(self, start: int) -> None:
        guard = 0
        dart = start
        while True:
            left, dart = self._reduce_pass(dart)
            if not left:
                return
            guard += 1
            if guard > 4 * len(self.origin) + 8:
                raise AssertionError("rectangular refinement made no progress")

    def add_frame(self, outer_dart: int) -> None:
        """Enclose the drawing in a rectangle joined to a reflex outer corner."""
        d = outer_dart
        for d in self.walk(outer_dart):
            if self.angle(d) >= 3:
                break
        else:
            raise AssertionError("outer face has no reflex corner")
        follow = self.next(d)
        direction = (self.dirs[follow] - 1) % 4
        corners = [self.add_vertex() for _ in range(4)]  # NW, NE, SE, SW
        self.add_edge(corners[0], corners[1], E)
        self.add_edge(corners[1], corners[2], 2)
        self.add_edge(corners[2], corners[3], 3)
        self.add_edge(corners[3], corners[0], N)
        # the frame side facing `direction` is the one whose dart heads (direction + 1)
        side_start = {N: corners[0], E: corners[1], 2: corners[2], 3: corners[3]}[direction]
        side_dart = self.at[side_start][(direction + 1) % 4]
        w, _ = self.split(side_dart)
        self.add_edge(self.head(d), w, direction)


@dataclass
class Refinement:
    """A rectangular refinement; vertices ``>= n_original`` are dummies."""

    n_original: int
    n: int
    origin: list[int]
    dirs: list[int]

    def ends(self) -> list[tuple[int, int]]:
        return [(self.origin[2 * e], self.origin[2 * e + 1]) for e in range(len(self.origin) // 2)]

    def graph(self) -> LabeledGraph:
        return LabeledGraph(
            self.n,
            tuple((u, v, direction_label(self.dirs[2 * e])) for e, (u, v) in enumerate(self.ends())),
        )

    def faces(self) -> list[list[int]]:
        o = _Ortho(self.n, self.ends(), self.dirs)
        seen = [False] * len(self.origin)
        out = []
        for d in range(len(self.origin)):
            if not seen[d]:
                cyc = o.walk(d)
                for x in cyc:
                    seen[x] = True
                out.append(cyc)
        return out

    def angles(self) -> list[int]:
        o = _Ortho(self.n, self.ends(), self.dirs)
        return [o.angle(d) for d in range(len(self.origin))]


def rectangulate(g: LabeledGraph, faces: FaceSet, a: AngleAssignment, dirs: list[int]) -> Refinement:
    ends = [(u, v) for u, v, _ in g.edges]
    o = _Ortho(g.n, ends, dirs)
    if g.m == 0:
        return Refinement(g.n, g.n, [], [])
    outer_dart = faces.faces[faces.outer][0] if faces.outer is not None else 0
    o.add_frame(outer_dart)
    for f, darts in enumerate(faces.faces):
        o.reduce_face(darts[0])
    return Refinement(g.n, o.n, o.origin, o.dirs)


def compact(ref: Refinement) -> list[tuple[int, int]]:
    """Longest-path layering on x- and y-classes; one point per refined vertex."""
    n = ref.n
    ends = ref.ends()

    def classes(same_axis: int) -> list[int]:
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e, (u, v) in enumerate(ends):
            if ref.dirs[2 * e] % 2 == same_axis:
                parent[find(u)] = find(v)
        return [find(x) for x in range(n)]

    xcls = classes(0)  # vertical edges share x
    ycls = classes(1)  # horizontal edges share y

    def layer(cls: list[int], axis_dir: int) -> dict[int, int]:
        succ: dict[int, list[int]] = {c: [] for c in set(cls)}
        indeg = {c: 0 for c in succ}
        for d, direction in enumerate(ref.dirs):
            if direction == axis_dir:
                u = ref.origin[d]
                v = ref.origin[d ^ 1]
                succ[cls[u]].append(cls[v])
                indeg[cls[v]] += 1
        level = {c: 0 for c in succ}
        queue = deque(sorted(c for c in succ if indeg[c] == 0))
        done = 0
        while queue:
            c = queue.popleft()
            done += 1
            for s in succ[c]:
                level[s] = max(level[s], level[c] + 1)
                indeg[s] -= 1
                if indeg[s] == 0:
                    queue.append(s)
        if done != len(succ):
            raise CyclicConstraint("constraint graph has a cycle")
        return level

    xl = layer(xcls, E)
    yl = layer(ycls, N)
    return [(xl[xcls[v]], yl[ycls[v]]) for v in range(n)]


def realize(g: LabeledGraph, faces: FaceSet, a: AngleAssignment) -> Drawing:
    """Coordinates for a verified assignment (the graph must be connected)."""
    dirs = orient_darts(g, faces, a)
    ref = rectangulate(g, faces, a, dirs)
    pts = compact(ref)[: g.n]
    return Drawing(g, normalize_points(pts))


def draw_plane(g: LabeledGraph, rot: RotationSystem) -> Drawing:
    """Decide and draw an HV-restricted plane graph; raises ``NotDrawable``."""
    validate_graph(g)
    if not g.is_connected():
        raise Disconnected("plane mode needs a connected graph")
    if g.m == 0:
        return Drawing(g, ((0, 0),) * g.n)
    faces = faces_from_rotation(g, rot, require_outer=True)
    a = assign_angles(g, rot, faces)
    return realize(g, faces, a)


__all__ = [
    "CyclicConstraint",
    "GraphError",
    "InconsistentPropagation",
    "Refinement",
    "compact",
    "draw_plane",
    "orient_darts",
    "realize",
    "rectangulate",
]
