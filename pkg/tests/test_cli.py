from __future__ import annotations

import json
import re
import xml.etree.ElementTree as ET

import pytest

from hvortho.cli import main, svg_points
from hvortho.drawing import Drawing
from hvortho.graph_core import LabeledGraph
from hvortho.validate import validate_drawing

# octagon with chords (0, 3) and (0, 5); this labelling is drawable
DEG4_PAIRS = [(i, (i + 1) % 8) for i in range(8)] + [(0, 3), (0, 5)]
DEG4_LABELS = "HVHHVVHVVH"


def square(labels: str, **extra) -> dict:
    doc = {
        "vertices": 4,
        "edges": [{"u": i, "v": (i + 1) % 4, "label": lab} for i, lab in enumerate(labels)],
        "rotation": [[1, 3], [2, 0], [3, 1], [0, 2]],
        "outer_face": [0, 3, 2, 1],
        "mode": "plane",
    }
    doc.update(extra)
    return doc


def ladder_doc(k: int) -> dict:
    top, bottom = list(range(k + 1)), list(range(k + 1, 2 * k + 2))
    edges = [(top[i], top[i + 1], "H") for i in range(k)] + [(bottom[i], bottom[i + 1], "H") for i in range(k)]
    edges += [(top[i], bottom[i], "V") for i in range(k + 1)]
    return {
        "vertices": 2 * k + 2,
        "edges": [{"u": u, "v": v, "label": lab} for u, v, lab in edges],
        "mode": "outerplanar",
    }


def outer_doc(n: int, pairs, labels: str) -> dict:
    return {
        "vertices": n,
        "edges": [{"u": u, "v": v, "label": lab} for (u, v), lab in zip(pairs, labels)],
        "mode": "outerplanar",
    }


@pytest.fixture
def put(tmp_path):
    def write(doc, name: str = "inst.json") -> str:
        p = tmp_path / name
        p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(p)

    return write


def _graph(doc: dict) -> LabeledGraph:
    return LabeledGraph.build(doc["vertices"], [(e["u"], e["v"], e["label"]) for e in doc["edges"]])


def test_decide_rectangle(put, capsys):
    assert main(["decide", put(square("HVHV"))]) == 0
    assert capsys.readouterr().out.strip() == "DRAWABLE"


def test_decide_two_sided_square(put, capsys):
    assert main(["decide", put(square("HHVV"))]) == 1
    assert capsys.readouterr().out.strip() == "NOT DRAWABLE: infeasible face f0"


def test_missing_outer_face_is_input_error(put, capsys):
    doc = square("HVHV")
    del doc["outer_face"]
    assert main(["decide", put(doc)]) == 2
    assert "outer_face" in capsys.readouterr().err


def test_outerplanar_rejects_rotation(put):
    assert main(["decide", put(square("HVHV", mode="outerplanar"))]) == 2


@pytest.mark.parametrize(
    "text, needle",
    [
        ("{", "line 1"),
        ('{"vertices": 2, "edges": [{"u": 0, "v": 1, "label": "X"}], "mode": "outerplanar"}', "edges[0].label"),
        ('{"vertices": "4", "edges": []}', "vertices"),
        ("[1, 2]", "object"),
    ],
)
def test_parse_errors_name_the_field(put, capsys, text, needle):
    assert main(["decide", put(text)]) == 2
    assert needle in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert main(["decide", str(tmp_path / "nope.json")]) == 2


def test_bad_usage_exits_two():
    assert main(["frobnicate"]) == 2


def test_svg_strokes(put, capsys):
    assert main(["draw", put(square("HVHV")), "--format", "svg"]) == 0
    root = ET.fromstring(capsys.readouterr().out.split("\n", 1)[1])
    lines = root.findall("{http://www.w3.org/2000/svg}line")
    widths = sorted(float(l.get("stroke-width")) for l in lines)
    assert widths == [1.5, 1.5, 4.0, 4.0]
    assert len(root.findall("{http://www.w3.org/2000/svg}circle")) == 4


def test_ladder_svg_round_trip(put, tmp_path):
    doc = ladder_doc(6)
    out = tmp_path / "ladder.svg"
    assert main(["draw", put(doc), "--format", "svg", "--out", str(out)]) == 0
    g = _graph(doc)
    pts = svg_points(out.read_text())
    assert validate_drawing(g, Drawing(g, tuple(pts))).ok


def test_coords_round_trip_through_validate(put, tmp_path, capsys):
    inst = put(ladder_doc(3))
    out = tmp_path / "d.json"
    assert main(["draw", inst, "--out", str(out)]) == 0
    capsys.readouterr()
    assert main(["validate", inst, str(out)]) == 0
    assert capsys.readouterr().out.strip() == "VALID"
    saved = json.loads(out.read_text())
    assert saved["instance"] == ladder_doc(3)


def test_tampered_drawing_reports_crossing(put, tmp_path, capsys):
    inst = put(ladder_doc(2))
    out = tmp_path / "d.json"
    main(["draw", inst, "--out", str(out)])
    saved = json.loads(out.read_text())
    saved["coordinates"][0] = saved["coordinates"][4]
    out.write_text(json.dumps(saved))
    capsys.readouterr()
    assert main(["validate", inst, str(out), "--json"]) == 1
    assert json.loads(capsys.readouterr().out)["ok"] is False


def test_validate_wrong_point_count(put, tmp_path):
    drawing = tmp_path / "d.json"
    drawing.write_text(json.dumps({"coordinates": [[0, 0]]}))
    assert main(["validate", put(square("HVHV")), str(drawing)]) == 2


def test_degree_four_outerplanar_draw(put, capsys):
    doc = outer_doc(8, DEG4_PAIRS, DEG4_LABELS)
    assert main(["draw", put(doc)]) == 0
    saved = json.loads(capsys.readouterr().out)
    g = _graph(doc)
    pts = tuple(tuple(p) for p in saved["coordinates"])
    assert validate_drawing(g, Drawing(g, pts)).ok


def test_draw_not_drawable(put, capsys):
    assert main(["draw", put(square("HHVV"))]) == 1
    assert capsys.readouterr().out.startswith("NOT DRAWABLE")


def test_check_reports_c1_on_triangle(put, capsys):
    doc = outer_doc(3, [(0, 1), (1, 2), (2, 0)], "HVH")
    assert main(["check", put(doc), "--json"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] is False
    assert {v["kind"] for v in report["violations"]} == {"C1"}
    assert main(["decide", put(doc)]) == 1
    assert re.fullmatch(r"NOT DRAWABLE: condition C1 f\d+", capsys.readouterr().out.strip())


def test_oracle_agrees_with_decide(put, capsys):
    for doc in (square("HVHV"), square("HHVV"), ladder_doc(2), outer_doc(3, [(0, 1), (1, 2), (2, 0)], "HVV")):
        path = put(doc)
        assert main(["oracle", path]) == main(["decide", path])
    capsys.readouterr()


def test_oracle_budget_exhausted(put, capsys):
    assert main(["oracle", put(ladder_doc(6)), "--budget-vertices", "4"]) == 2
    assert "budget" in capsys.readouterr().err


def test_draw_is_deterministic(put, capsys):
    path = put(ladder_doc(4))
    main(["draw", path])
    first = capsys.readouterr().out
    main(["draw", path])
    assert capsys.readouterr().out == first


def test_decide_directory(tmp_path, capsys):
    (tmp_path / "a.json").write_text(json.dumps(square("HVHV")))
    (tmp_path / "b.json").write_text(json.dumps(square("HHVV")))
    assert main(["decide", str(tmp_path), "--workers", "1", "--json"]) == 1
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [r["exit"] for r in rows] == [0, 1]


def test_mode_override(put, capsys):
    doc = ladder_doc(1)
    doc["mode"] = "plane"
    assert main(["decide", put(doc), "--mode", "outerplanar"]) == 0


def test_oracle_sat_engine(put, capsys):
    path = put(ladder_doc(4))
    assert main(["oracle", path, "--engine", "sat"]) == 0
    assert main(["oracle", put(outer_doc(3, [(0, 1), (1, 2), (2, 0)], "HVV"), "t.json"), "--engine", "sat"]) == 1
