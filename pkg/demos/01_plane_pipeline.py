"""Deciding and drawing a plane HV-graph with a fixed embedding.

An L-shaped hexagon with one extra vertical edge inside it.  The angle
flow decides the corners, the layout turns them into coordinates, and the
validator certifies the result independently.
"""

from __future__ import annotations

from pathlib import Path

from hvortho.angle_flow import assign_angles, classify_corners, face_supplies
from hvortho.cli import render_svg
from hvortho.graph_core import LabeledGraph, faces_from_rotation
from hvortho.ortho_layout import draw_plane
from hvortho.validate import rotation_from_drawing, validate_drawing

# vertices of an L: 0 (0,0) 1 (2,0) 2 (2,1) 3 (1,1) 4 (1,2) 5 (0,2), plus 6 on edge 0-1
g = LabeledGraph.build(
    7,
    [(0, 6, "H"), (6, 1, "H"), (1, 2, "V"), (2, 3, "H"), (3, 4, "V"), (4, 5, "H"), (5, 0, "V"), (6, 3, "V")],
)
# read the embedding off a rough sketch; the pipeline only keeps the rotation
sketch = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2), (1, 0)]
rot = rotation_from_drawing(g, sketch)
print("rotation:", [[g.head(d) for d in darts] for darts in rot.rotation], "outer walk:", rot.outer_face)
faces = faces_from_rotation(g, rot, require_outer=True)

print("faces:", [faces.vertex_walk(g, f) for f in range(len(faces.faces))], "outer:", faces.outer)
cls = classify_corners(g, faces)
for sup in face_supplies(g, faces, cls):
    print(f"face {sup.face}: {sup.free} free corners, {sup.reflex} reflex + {sup.convex} convex needed")

a = assign_angles(g, rot, faces)
print("angles by corner:", a.angles)
d = draw_plane(g, rot)
print("coordinates:", d.points)
print("validator:", validate_drawing(g, d, rot))

out = Path(__file__).with_name("out")
out.mkdir(exist_ok=True)
(out / "plane_l_shape.svg").write_text(render_svg(d))
print("wrote", out / "plane_l_shape.svg")
