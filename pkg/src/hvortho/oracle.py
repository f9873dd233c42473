"""Brute-force ground truth for small instances.

``enumerate_assignments`` tries every choice of convex/reflex angle at the
free corners of a plane graph.  ``grid_search_drawing`` ignores embeddings
altogether and searches coordinates directly.

Grid search works on the classes of vertices joined by vertical edges (one
x each) and by horizontal edges (one y each).  A valid drawing stays valid
when one class is nudged by a small amount, so some valid drawing gives
every class its own coordinate; the search therefore only has to try
permutations of the x-classes and of the y-classes.  Two engines walk that
space: plain backtracking, and a SAT encoding of the two class orders for
graphs where backtracking would take too long.
"""

from __future__ import annotations

from dataclasses import dataclass

from .angle_flow import AngleAssignment, required_face_sum
from .drawing import Drawing
from .graph_core import FaceSet, Label, LabeledGraph, RotationSystem, faces_from_rotation


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_free_corners: int = 20
    max_vertices: int = 8
    max_grid: int | None = None  # defaults to the vertex count

    def __post_init__(self) -> None:
        if self.max_free_corners <= 0 or self.max_vertices <= 0:
            raise ValueError("budgets must be positive")
        if self.max_grid is not None and self.max_grid <= 0:
            raise ValueError("budgets must be positive")


def enumerate_assignments(
    g: LabeledGraph,
    rot: RotationSystem,
    budget: OracleBudget = OracleBudget(),
    faces: FaceSet | None = None,
) -> tuple[bool, AngleAssignment | None]:
    """Exhaustive search for an admissible angle assignment."""
    if faces is None:
        faces = faces_from_rotation(g, rot, require_outer=True)
    deg = g.degree()
    angles = [0] * (2 * g.m)
    free: list[int] = []
    for c in range(2 * g.m):
        v = g.head(c)
        out = faces.next_dart[c]
        if deg[v] == 1:
            angles[c] = 4
        elif g.label(c) == g.label(out):
            angles[c] = 2
        elif deg[v] >= 3:
            angles[c] = 1
        else:
            free.append(c)
    if len(free) > budget.max_free_corners:
        raise BudgetExceeded(f"{len(free)} free corners > {budget.max_free_corners}")

    # each vertex and face sum becomes a check that fires once its last free
    # corner is set; the choices are still walked exhaustively in order
    at = {c: i for i, c in enumerate(free)}
    groups = [[c for c in range(2 * g.m) if g.head(c) == v] for v in range(g.n) if deg[v]]
    targets = [4] * len(groups)
    for f, darts in enumerate(faces.faces):
        groups.append(list(darts))
        targets.append(required_face_sum(faces, f))
    closing: list[list[int]] = [[] for _ in free]
    for k, darts in enumerate(groups):
        slots = [at[c] for c in darts if c in at]
        if not slots:
            if sum(angles[c] for c in darts) != targets[k]:
                return False, None
            continue
        closing[max(slots)].append(k)

    def extend(i: int) -> bool:
        if i == len(free):
            return True
        for x in (1, 3):
            angles[free[i]] = x
            if all(sum(angles[c] for c in groups[k]) == targets[k] for k in closing[i]) and extend(i + 1):
                return True
        return False

    if extend(0):
        return True, AngleAssignment(tuple(angles))
    return False, None


# -- grid search -------------------------------------------------------------


def _classes(g: LabeledGraph, label: Label) -> list[int]:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, lab in g.edges:
        if lab is label:
            parent[find(u)] = find(v)
    roots = sorted({find(x) for x in range(g.n)})
    index = {r: i for i, r in enumerate(roots)}
    return [index[find(x)] for x in range(g.n)]


def _quick_reject(g: LabeledGraph) -> bool:
    """Label patterns no straight-line orthogonal drawing can have."""
    nh = [0] * g.n
    nv = [0] * g.n
    for u, v, lab in g.edges:
        cnt = nh if lab is Label.H else nv
        cnt[u] += 1
        cnt[v] += 1
    return any(h > 2 or v > 2 for h, v in zip(nh, nv))


def _orders(k: int, constraints: list[tuple[tuple[int, ...], object]]):
    """Every permutation (class -> position) of ``k`` classes meeting the constraints.

    A constraint is (scope, predicate); the predicate receives the position
    list and runs once every class in its scope is placed.
    """
    by_class: list[list] = [[] for _ in range(k)]
    for scope, pred in constraints:
        for c in set(scope):
            by_class[c].append((scope, pred))
    pos = [-1] * k

    def place(depth: int):
        if depth == k:
            yield list(pos)
            return
        for c in range(k):
            if pos[c] >= 0:
                continue
            pos[c] = depth
            if all(
                pred(pos) for scope, pred in by_class[c] if all(pos[x] >= 0 for x in scope)
            ):
                yield from place(depth + 1)
            pos[c] = -1

    yield from place(0)


def _interval_constraints(g: LabeledGraph, label: Label, along: list[int], across: list[int]):
    """Same-line overlap rules for edges of ``label``.

    ``along`` gives the class of each vertex on the axis the edges span,
    ``across`` the class on the other axis (edges on one line share it).
    """
    edges = [(u, v) for u, v, lab in g.edges if lab is label]
    out = []
    for i, (u1, v1) in enumerate(edges):
        for u2, v2 in edges[i + 1:]:
            if across[u2] != across[u1]:
                continue
            shared = {u1, v1} & {u2, v2}
            s = next(iter(shared)) if shared else None

            def pred(P, u1=u1, v1=v1, u2=u2, v2=v2, s=s):
                lo1, hi1 = sorted((P[along[u1]], P[along[v1]]))
                lo2, hi2 = sorted((P[along[u2]], P[along[v2]]))
                lo, hi = max(lo1, lo2), min(hi1, hi2)
                if lo > hi:
                    return True
                return s is not None and lo == hi == P[along[s]]

            out.append(((along[u1], along[v1], along[u2], along[v2]), pred))
        for w in range(g.n):
            if w in (u1, v1) or across[w] != across[u1]:
                continue

            def pred(P, u1=u1, v1=v1, w=w):
                lo, hi = sorted((P[along[u1]], P[along[v1]]))
                return not lo <= P[along[w]] <= hi

            out.append(((along[u1], along[v1], along[w]), pred))
    return out


def grid_search_drawing(
    g: LabeledGraph,
    budget: OracleBudget = OracleBudget(),
    engine: str = "backtrack",
) -> Drawing | None:
    """Exhaustive search for a good drawing; ``None`` certifies there is none.

    ``engine`` is ``"backtrack"`` or ``"sat"``; both decide the same question.
    """
    if engine not in ("backtrack", "sat"):
        raise ValueError(f"unknown engine {engine!r}")
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"{g.n} vertices > {budget.max_vertices}")
    if g.n == 0:
        return Drawing(g, ())
    if _quick_reject(g):
        return None
    xc = _classes(g, Label.V)
    yc = _classes(g, Label.H)
    nx_, ny_ = max(xc) + 1, max(yc) + 1
    limit = budget.max_grid or g.n
    if nx_ > limit or ny_ > limit:
        raise BudgetExceeded("grid too small for the class count")
    # two vertices in the same x- and y-class would coincide
    if len({(xc[v], yc[v]) for v in range(g.n)}) < g.n:
        return None
    hs = [(u, v) for u, v, lab in g.edges if lab is Label.H]
    vs = [(u, v) for u, v, lab in g.edges if lab is Label.V]
    if any(xc[u] == xc[v] for u, v in hs) or any(yc[u] == yc[v] for u, v in vs):
        return None

    if engine == "sat":
        return _sat_search(g, xc, yc, nx_, ny_)

    x_cons = _interval_constraints(g, Label.H, xc, yc)
    y_cons = _interval_constraints(g, Label.V, yc, xc)
    # mirror images in x and in y are valid together with the original
    if nx_ > 1:
        x_cons.append(((0, nx_ - 1), lambda P: P[0] < P[nx_ - 1]))
    if ny_ > 1:
        y_cons.append(((0, ny_ - 1), lambda P: P[0] < P[ny_ - 1]))

    for X in _orders(nx_, x_cons):
        cons = list(y_cons)
        for u1, v1 in hs:
            lo, hi = sorted((X[xc[u1]], X[xc[v1]]))
            for u2, v2 in vs:
                x = X[xc[u2]]
                if not lo <= x <= hi:
                    continue
                shared = {u1, v1} & {u2, v2}
                s = next(iter(shared)) if shared else None
                if s is not None and X[xc[s]] != x:
                    s = None

                def pred(Y, u1=u1, u2=u2, v2=v2, s=s):
                    y = Y[yc[u1]]
                    blo, bhi = sorted((Y[yc[u2]], Y[yc[v2]]))
                    if not blo <= y <= bhi:
                        return True
                    return s is not None and Y[yc[s]] == y

                cons.append(((yc[u1], yc[u2], yc[v2]), pred))
        for Y in _orders(ny_, cons):
            return Drawing(g, tuple((X[xc[v]], Y[yc[v]]) for v in range(g.n)))
    return None


class _OrderVars:
    """Boolean ``before(i, j)`` for every pair of classes on one axis."""

    def __init__(self, k: int, start: int) -> None:
        self.k = k
        self.ids: dict[tuple[int, int], int] = {}
        for i in range(k):
            for j in range(i + 1, k):
                start += 1
                self.ids[i, j] = start
        self.top = start

    def before(self, i: int, j: int) -> int:
        return self.ids[i, j] if i < j else -self.ids[j, i]

    def transitivity(self):
        k = self.k
        for i in range(k):
            for j in range(k):
                for l in range(k):
                    if len({i, j, l}) == 3:
                        yield [-self.before(i, j), -self.before(j, l), self.before(i, l)]

    def positions(self, model: set[int]) -> list[int]:
        return [sum(1 for j in range(self.k) if j != i and self.before(j, i) in model) for i in range(self.k)]


def _sat_search(g: LabeledGraph, xc: list[int], yc: list[int], nx_: int, ny_: int) -> Drawing | None:
    from pysat.solvers import Cadical153

    X = _OrderVars(nx_, 0)
    Y = _OrderVars(ny_, X.top)
    top = Y.top
    clauses: list[list[int]] = [*X.transitivity(), *Y.transitivity()]
    if nx_ > 1:
        clauses.append([X.before(0, nx_ - 1)])
    if ny_ > 1:
        clauses.append([Y.before(0, ny_ - 1)])

    def fresh() -> int:
        nonlocal top
        top += 1
        return top

    def inside(o: _OrderVars, c: int, p: int, q: int) -> int | None:
        """Literal implied by ``c`` lying in the closed span of ``p`` and ``q``;
        None when it always does."""
        if c in (p, q):
            return None
        b = fresh()
        clauses.append([-o.before(p, c), -o.before(c, q), b])
        clauses.append([-o.before(q, c), -o.before(c, p), b])
        return b

    def strictly_apart(o: _OrderVars, span1, span2) -> None:
        z = fresh()
        for a in span1:
            for b in span2:
                clauses.append([-z, o.before(a, b)])
                clauses.append([z, o.before(b, a)])

    hs = [(u, v) for u, v, lab in g.edges if lab is Label.H]
    vs = [(u, v) for u, v, lab in g.edges if lab is Label.V]

    # a horizontal and a vertical edge may only meet at a shared endpoint,
    # and when they share one that is the only place they can meet
    for u1, v1 in hs:
        for u2, v2 in vs:
            if {u1, v1} & {u2, v2}:
                continue
            bx = inside(X, xc[u2], xc[u1], xc[v1])
            by = inside(Y, yc[u1], yc[u2], yc[v2])
            clause = [-b for b in (bx, by) if b is not None]
            if not clause:
                return None
            clauses.append(clause)

    for edges, o, along, across in ((hs, X, xc, yc), (vs, Y, yc, xc)):
        for i, (u1, v1) in enumerate(edges):
            for u2, v2 in edges[i + 1:]:
                if across[u1] != across[u2]:
                    continue
                shared = {u1, v1} & {u2, v2}
                if shared:
                    (w,) = shared
                    c = along[w]
                    a = along[v1 if u1 == w else u1]
                    b = along[v2 if u2 == w else u2]
                    # the two edges must leave the shared point in opposite directions
                    clauses.append([o.before(a, c), o.before(b, c)])
                    clauses.append([o.before(c, a), o.before(c, b)])
                else:
                    strictly_apart(o, (along[u1], along[v1]), (along[u2], along[v2]))
            # no other vertex on the edge
            for w in range(g.n):
                if w in (u1, v1) or across[w] != across[u1]:
                    continue
                c, p, q = along[w], along[u1], along[v1]
                clauses.append([-o.before(p, c), -o.before(c, q)])
                clauses.append([-o.before(q, c), -o.before(c, p)])

    with Cadical153(bootstrap_with=clauses) as solver:
        if not solver.solve():
            return None
        model = set(solver.get_model())
    px, py = X.positions(model), Y.positions(model)
    return Drawing(g, tuple((px[xc[v]], py[yc[v]]) for v in range(g.n)))
