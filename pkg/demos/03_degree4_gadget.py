"""Replacing an alternating degree-4 vertex with a degree-3 gadget.

A plus sign has one vertex with two H and two V edges.  transform_degree4
swaps it for a small rigid subgraph of maximum degree 3; a drawing of the
larger graph collapses back onto the original.
"""

from __future__ import annotations

from hvortho.drawing import Drawing
from hvortho.graph_core import LabeledGraph
from hvortho.outerplanar import draw_via_gadgets, transform_degree4
from hvortho.validate import validate_drawing

plus = LabeledGraph.build(5, [(0, 1, "V"), (0, 2, "H"), (0, 3, "V"), (0, 4, "H")])
g2, maps = transform_degree4(plus)
print(f"original: {plus.n} vertices, max degree {max(plus.degree())}")
print(f"expanded: {g2.n} vertices, max degree {max(g2.degree())}")
print("gadget roles:", maps[0].ids)

shape = Drawing(plus, ((0, 0), (0, 1), (1, 0), (0, -1), (-1, 0)))
run = draw_via_gadgets(plus, shape)
print("expanded drawing valid:", validate_drawing(g2, run.drawing).ok)
print("recovered:", run.recovered.points, "valid:", validate_drawing(plus, run.recovered).ok)
