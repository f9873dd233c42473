"""Instance generators shared by the test modules."""

from __future__ import annotations

import itertools
import random

from hvortho.graph_core import Label, LabeledGraph, RotationSystem
from hvortho.validate import rotation_from_drawing


def rotation_from_points(g: LabeledGraph, pts) -> RotationSystem:
    return rotation_from_drawing(g, pts)


def cycle(k: int, labels) -> LabeledGraph:
    return LabeledGraph.build(k, [(i, (i + 1) % k, labels[i]) for i in range(k)])


def cycle_rotation(g: LabeledGraph) -> RotationSystem:
    """Vertices 0..k-1 run counter-clockwise around the inner face."""
    k = g.n
    order = [[(i + 1) % k, (i - 1) % k] for i in range(k)]
    return RotationSystem.from_neighbors(g, order, outer_face=[(-i) % k for i in range(k)])


def random_grid_instance(rng: random.Random, w: int, h: int, keep: float = 0.7):
    """Connected random subgraph of a w x h grid, labelled by its geometry.

    Returns (graph, rotation, points); the instance is drawable by construction.
    """
    pts = [(x, y) for y in range(h) for x in range(w)]
    idx = {p: i for i, p in enumerate(pts)}
    cand = []
    for (x, y), i in idx.items():
        if x + 1 < w:
            cand.append((i, idx[(x + 1, y)], "H"))
        if y + 1 < h:
            cand.append((i, idx[(x, y + 1)], "V"))
    rng.shuffle(cand)
    parent = list(range(len(pts)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    chosen = []
    rest = []
    for e in cand:
        a, b = find(e[0]), find(e[1])
        if a != b:
            parent[a] = b
            chosen.append(e)
        else:
            rest.append(e)
    chosen += [e for e in rest if rng.random() < keep]
    g = LabeledGraph.build(len(pts), chosen)
    return g, rotation_from_points(g, pts), pts


def _noncrossing_chord_sets(n: int, max_degree: int):
    """Non-crossing chord sets of the n-gon with vertex degree <= max_degree."""
    cand = [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]

    def crosses(a, b):
        (i, j), (k, l) = a, b
        return i < k < j < l or k < i < l < j

    def rec(start, chosen, deg):
        yield tuple(chosen)
        for t in range(start, len(cand)):
            c = cand[t]
            if deg[c[0]] >= max_degree or deg[c[1]] >= max_degree:
                continue
            if any(crosses(c, x) for x in chosen):
                continue
            deg[c[0]] += 1
            deg[c[1]] += 1
            chosen.append(c)
            yield from rec(t + 1, chosen, deg)
            chosen.pop()
            deg[c[0]] -= 1
            deg[c[1]] -= 1

    yield from rec(0, [], [2] * n)


def _dihedral_key(n: int, chords) -> tuple:
    best = None
    for r in range(n):
        for s in (1, -1):
            img = tuple(sorted(tuple(sorted(((s * i + r) % n, (s * j + r) % n))) for i, j in chords))
            if best is None or img < best:
                best = img
    return best


def outerplanar_catalog(max_n: int, max_degree: int = 3, min_n: int = 3) -> list[tuple[int, tuple]]:
    """Biconnected outerplanar graphs up to isomorphism as (n, edge pairs).

    The outer cycle is 0, 1, ..., n-1; chords follow.  A biconnected
    outerplanar graph has a unique Hamiltonian cycle, so isomorphism classes
    are dihedral classes of chord sets.
    """
    out = []
    for n in range(min_n, max_n + 1):
        seen = set()
        for chords in _noncrossing_chord_sets(n, max_degree):
            key = _dihedral_key(n, chords)
            if key in seen:
                continue
            seen.add(key)
            pairs = tuple((i, (i + 1) % n) for i in range(n)) + tuple(key)
            out.append((n, pairs))
    return out


def labelings(m: int, limit: int, rng: random.Random):
    """All 2^m labelings when there are at most ``limit``; else ``limit`` samples."""
    if 2 ** m <= limit:
        yield from itertools.product("HV", repeat=m)
    else:
        for _ in range(limit):
            yield tuple(rng.choice("HV") for _ in range(m))


def geometric_instance(n: int, pairs, pts):
    """Graph labelled by the geometry of ``pts``, with the matching embedding."""
    edges = [(u, v, "H" if pts[u][1] == pts[v][1] else "V") for u, v in pairs]
    g = LabeledGraph.build(n, edges)
    return g, rotation_from_points(g, pts)


def polygon(pts):
    """Axis-parallel polygon through ``pts`` in order."""
    k = len(pts)
    return geometric_instance(k, [(i, (i + 1) % k) for i in range(k)], pts)
