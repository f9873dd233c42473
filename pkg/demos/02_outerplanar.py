"""Biconnected outerplanar graphs: conditions first, then a drawing.

No embedding is given.  check_conditions reads the labels along each inner
face of the unique outerplanar embedding; when they pass, draw_outerplanar
picks an embedding and draws it, and every critical edge ends up as the
middle of a U-turn.
"""

from __future__ import annotations

from hvortho.graph_core import LabeledGraph
from hvortho.oracle import OracleBudget, grid_search_drawing
from hvortho.outerplanar import canonical_embedding, check_conditions, draw_outerplanar, face_stats
from hvortho.validate import check_lemma_bc, validate_drawing


def hexagon_with_flaps(flaps: int) -> LabeledGraph:
    edges = [(0, 1, "H"), (1, 2, "V"), (2, 3, "H"), (3, 4, "V"), (4, 5, "H"), (5, 0, "V")]
    n = 6
    for x, y in [(1, 2), (3, 4), (5, 0)][:flaps]:
        edges += [(x, n, "H"), (n, n + 1, "V"), (n + 1, y, "H")]
        n += 2
    return LabeledGraph.build(n, edges)


triangle = LabeledGraph.build(3, [(0, 1, "H"), (1, 2, "V"), (2, 0, "H")])
print("triangle:", check_conditions(triangle))

# three squares around an alternating hexagon: each shared edge is critical
# in the hexagon, and an odd count of them cannot be drawn
three = hexagon_with_flaps(3)
print("three flaps:", check_conditions(three))
print("  grid oracle agrees:", grid_search_drawing(three, OracleBudget(max_vertices=12)) is None)

two = hexagon_with_flaps(2)
print("two flaps:", check_conditions(two))
d = draw_outerplanar(two)
print("  coordinates:", d.points)
print("  valid:", validate_drawing(two, d).ok)
emb = canonical_embedding(two)
for f in emb.inner:
    verts = emb.face_vertices(f)
    for i in face_stats(emb, f).critical:
        edge = (verts[i], verts[(i + 1) % len(verts)])
        print(f"  critical edge {edge} in face {f}: U-turn holds = {check_lemma_bc(two, d, verts, i)}")
