"""Recognition of drawable biconnected outerplanar graphs (maximum degree 3).

Three local tests decide drawability:

* C1: every inner face boundary alternates label at least four times when
  read cyclically (two or more H-runs and two or more V-runs).
* C2: if every V edge of a face is critical, their number is even; the
  same for H edges.
* C3: no vertex has three edges with the same label.
"""

from __future__ import annotations

from ..graph_core import ConditionReport, Label, LabeledGraph
from .embedding import OuterplanarEmbedding, canonical_embedding, face_stats, segments


def check_c1(emb: OuterplanarEmbedding, f: int) -> bool:
    runs = segments(emb.face_vertices(f), emb.face_labels(f))
    return sum(1 for s in runs if s.label is Label.H) >= 2 and sum(1 for s in runs if s.label is Label.V) >= 2


def check_conditions(g: LabeledGraph, emb: OuterplanarEmbedding | None = None) -> ConditionReport:
    """Every violation of C1-C3; raises ``NotBiconnected``/``NotOuterplanar``."""
    if emb is None:
        emb = canonical_embedding(g)
    report = ConditionReport()
    for f in emb.inner:
        walk = emb.face_vertices(f)
        if not check_c1(emb, f):
            report.add("C1", f, f"face {walk} lacks an HVHV pattern")
        st = face_stats(emb, f)
        if st.e_v and st.c_v == st.e_v and st.c_v % 2:
            report.add("C2", f, f"all {st.e_v} vertical edges of face {walk} are critical (odd)")
        if st.e_h and st.c_h == st.e_h and st.c_h % 2:
            report.add("C2", f, f"all {st.e_h} horizontal edges of face {walk} are critical (odd)")
    nh = [0] * g.n
    nv = [0] * g.n
    for u, v, lab in g.edges:
        cnt = nh if lab is Label.H else nv
        cnt[u] += 1
        cnt[v] += 1
    for v in range(g.n):
        if nh[v] > 2:
            report.add("C3", v, f"{nh[v]} horizontal edges")
        if nv[v] > 2:
            report.add("C3", v, f"{nv[v]} vertical edges")
    return report
