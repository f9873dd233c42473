"""Brute-force oracles as ground truth.

enumerate_assignments tries every convex/reflex choice at free corners of a
fixed embedding and should agree with the flow.  grid_search_drawing ignores
embeddings and searches coordinate orders directly, with a backtracking and
a SAT engine over the same search space.
"""

from __future__ import annotations

import itertools
import time

from hvortho.angle_flow import NotDrawable, assign_angles
from hvortho.graph_core import LabeledGraph, RotationSystem, faces_from_rotation
from hvortho.oracle import OracleBudget, enumerate_assignments, grid_search_drawing


def cycle(labels: str) -> tuple[LabeledGraph, RotationSystem]:
    k = len(labels)
    g = LabeledGraph.build(k, [(i, (i + 1) % k, labels[i]) for i in range(k)])
    order = [[(i + 1) % k, (i - 1) % k] for i in range(k)]
    return g, RotationSystem.from_neighbors(g, order, outer_face=[(-i) % k for i in range(k)])


agree = total = 0
for k in range(3, 9):
    for labs in itertools.product("HV", repeat=k):
        g, rot = cycle("".join(labs))
        try:
            assign_angles(g, rot, faces_from_rotation(g, rot, require_outer=True))
            flow = True
        except NotDrawable:
            flow = False
        agree += flow == enumerate_assignments(g, rot)[0]
        total += 1
print(f"cycles C3-C8: flow and enumeration agree on {agree}/{total}")

g, _ = cycle("HVHHVHVV")
for engine in ("backtrack", "sat"):
    t = time.perf_counter()
    d = grid_search_drawing(g, OracleBudget(max_vertices=8), engine=engine)
    print(f"{engine:9s}: {d.points if d else None} ({time.perf_counter() - t:.3f}s)")
