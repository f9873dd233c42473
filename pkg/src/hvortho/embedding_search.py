"""Exact drawing of small planar graphs by trying every embedding.

A good drawing induces a rotation system and an outer face, and the flow
test is exact for a fixed embedding.  Enumerating all rotation systems
(degree-4 vertices only in alternating orders) and every choice of outer
face therefore decides drawability exactly.  The count grows as
``2^(#degree-3 and degree-4 vertices) * faces``, so this is for small
graphs only.
"""

from __future__ import annotations

import itertools

from .angle_flow import NotDrawable, assign_angles
from .drawing import Drawing
from .graph_core import (
    GraphError,
    LabeledGraph,
    RotationSystem,
    faces_from_rotation,
    label_degree_violations,
    validate_graph,
)
from .oracle import BudgetExceeded
from .ortho_layout import realize


def _cyclic_orders(g: LabeledGraph, darts: list[int]) -> list[tuple[int, ...]]:
    if len(darts) <= 2:
        return [tuple(darts)]
    first, rest = darts[0], darts[1:]
    out = []
    for perm in itertools.permutations(rest):
        order = (first,) + perm
        if len(order) == 4:
            labs = [g.label(d) for d in order]
            if labs[0] == labs[1] or labs[1] == labs[2]:
                continue
        out.append(order)
    return out


def rotation_systems(g: LabeledGraph, limit: int = 1 << 16):
    adj = g.adjacency()
    choices = [_cyclic_orders(g, adj[v]) for v in range(g.n)]
    total = 1
    for c in choices:
        total *= max(len(c), 1)
    if total > limit:
        raise BudgetExceeded(f"{total} rotation systems > {limit}")
    for combo in itertools.product(*choices):
        yield RotationSystem(tuple(combo))


def search_drawing(g: LabeledGraph, limit: int = 1 << 16) -> tuple[Drawing, RotationSystem] | None:
    """A good drawing with its embedding, or None when none exists."""
    validate_graph(g)
    if not g.is_connected():
        raise GraphError("embedding search needs a connected graph")
    if not label_degree_violations(g).ok:
        return None
    if g.m == 0:
        return Drawing(g, ((0, 0),) * g.n), RotationSystem(((),) * g.n)
    for bare in rotation_systems(g, limit):
        try:
            fs = faces_from_rotation(g, bare)
        except GraphError:
            continue
        for f in range(len(fs.faces)):
            rot = RotationSystem(bare.rotation, tuple(fs.vertex_walk(g, f)))
            faces = faces_from_rotation(g, rot, require_outer=True)
            try:
                a = assign_angles(g, rot, faces)
            except NotDrawable:
                continue
            return realize(g, faces, a), rot
    return None
