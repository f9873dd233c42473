"""Command line entry point: ``hvortho decide|draw|check|oracle|validate``.

Exit codes: 0 success / drawable / valid, 1 negative verdict, 2 bad input
or an exhausted budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .angle_flow import NotDrawable
from .drawing import Drawing
from .graph_core import GraphError, Label, LabeledGraph, RotationSystem, validate_graph
from .oracle import BudgetExceeded, OracleBudget, enumerate_assignments, grid_search_drawing
from .ortho_layout import draw_plane
from .outerplanar import check_conditions, draw_outerplanar
from .validate import validate_drawing

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2
SVG_UNIT = 40
SVG_MARGIN = 20


class InputError(Exception):
    """Malformed instance or drawing file; the message names the field."""


@dataclass(frozen=True)
class Instance:
    graph: LabeledGraph
    mode: str
    rotation: RotationSystem | None
    raw: dict


def _load_json(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be an object")
    return data


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: expected an integer, got {value!r}")
    return value


def parse_instance(data: dict, mode: str | None = None, source: str = "instance") -> Instance:
    n = _int(data.get("vertices"), f"{source}: vertices")
    if n < 0:
        raise InputError(f"{source}: vertices must be nonnegative")
    edges_raw = data.get("edges")
    if not isinstance(edges_raw, list):
        raise InputError(f"{source}: edges must be a list")
    edges = []
    for i, e in enumerate(edges_raw):
        where = f"{source}: edges[{i}]"
        if not isinstance(e, dict):
            raise InputError(f"{where}: expected an object with u, v, label")
        u = _int(e.get("u"), f"{where}.u")
        v = _int(e.get("v"), f"{where}.v")
        lab = e.get("label")
        if lab not in ("H", "V"):
            raise InputError(f"{where}.label: expected 'H' or 'V', got {lab!r}")
        edges.append((u, v, Label(lab)))
    mode = mode or data.get("mode", "plane")
    if mode not in ("plane", "outerplanar"):
        raise InputError(f"{source}: mode must be 'plane' or 'outerplanar', got {mode!r}")
    try:
        g = LabeledGraph.build(n, edges)
        validate_graph(g)
    except GraphError as exc:
        raise InputError(f"{source}: {exc}") from None
    rot = None
    if mode == "plane":
        if "rotation" not in data or "outer_face" not in data:
            raise InputError(f"{source}: plane mode needs 'rotation' and 'outer_face'")
        order = data["rotation"]
        outer = data["outer_face"]
        if not isinstance(order, list) or not all(isinstance(r, list) for r in order):
            raise InputError(f"{source}: rotation must be a list of neighbour lists")
        if not isinstance(outer, list):
            raise InputError(f"{source}: outer_face must be a list of vertex ids")
        try:
            rot = RotationSystem.from_neighbors(
                g, [[_int(w, f"{source}: rotation") for w in r] for r in order],
                [_int(w, f"{source}: outer_face") for w in outer],
            )
        except (GraphError, KeyError) as exc:
            raise InputError(f"{source}: rotation: {exc}") from None
    elif "rotation" in data:
        raise InputError(f"{source}: outerplanar mode chooses its own embedding; remove 'rotation'")
    return Instance(g, mode, rot, data)


def load_instance(path: str, mode: str | None = None) -> Instance:
    return parse_instance(_load_json(path), mode, path)


# -- core actions --------------------------------------------------------------


def draw_instance(inst: Instance) -> Drawing:
    """Drawing for the instance; raises ``NotDrawable`` or ``InputError``."""
    try:
        if inst.mode == "plane":
            return draw_plane(inst.graph, inst.rotation)
        return draw_outerplanar(inst.graph)
    except NotDrawable:
        raise
    except GraphError as exc:
        raise InputError(str(exc)) from None


def decide_instance(inst: Instance) -> tuple[bool, str]:
    """(drawable, reason); the reason names the failing stage and element."""
    try:
        if inst.mode == "outerplanar" and max(inst.graph.degree(), default=0) <= 3:
            report = check_conditions(inst.graph)
            if not report.ok:
                bad = report.violations[0]
                return False, f"condition {bad.kind} {'f' if bad.kind != 'C3' else 'v'}{bad.element}"
            return True, ""
        draw_instance(inst)
        return True, ""
    except NotDrawable as exc:
        if exc.element is None:
            return False, exc.stage
        return False, f"{exc.stage} {exc.element}"
    except GraphError as exc:
        raise InputError(str(exc)) from None


def drawing_document(inst: Instance, d: Drawing) -> dict:
    return {"instance": inst.raw, "coordinates": [[int(x), int(y)] for x, y in d.points]}


def render_svg(d: Drawing) -> str:
    g = d.graph
    pts = d.points
    max_x = max((p[0] for p in pts), default=0)
    max_y = max((p[1] for p in pts), default=0)
    width = 2 * SVG_MARGIN + SVG_UNIT * max_x
    height = 2 * SVG_MARGIN + SVG_UNIT * max_y

    def sx(x) -> int:
        return SVG_MARGIN + SVG_UNIT * int(x)

    def sy(y) -> int:  # document y grows downward
        return SVG_MARGIN + SVG_UNIT * (max_y - int(y))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    for e, (u, v, lab) in enumerate(g.edges):
        stroke = 4 if lab is Label.H else 1.5
        out.append(
            f'  <line class="edge {lab.value}" data-edge="{e}" x1="{sx(pts[u][0])}" y1="{sy(pts[u][1])}" '
            f'x2="{sx(pts[v][0])}" y2="{sy(pts[v][1])}" stroke="black" stroke-width="{stroke}"/>'
        )
    for v, (x, y) in enumerate(pts):
        out.append(f'  <circle class="vertex" data-vertex="{v}" cx="{sx(x)}" cy="{sy(y)}" r="4" fill="white" stroke="black"/>')
        out.append(f'  <text x="{sx(x) + 6}" y="{sy(y) - 6}" font-size="10">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def svg_points(svg_text: str) -> list[tuple[int, int]]:
    """Integer coordinates read back from ``render_svg`` output."""
    import xml.etree.ElementTree as ET

    root = ET.fromstring(svg_text)
    ns = "{http://www.w3.org/2000/svg}"
    height = int(root.get("height"))
    found = {}
    for c in root.iter(f"{ns}circle"):
        v = int(c.get("data-vertex"))
        x = (int(c.get("cx")) - SVG_MARGIN) // SVG_UNIT
        y = (height - SVG_MARGIN - int(c.get("cy"))) // SVG_UNIT
        found[v] = (x, y)
    return [found[v] for v in range(len(found))]


def budget_from(args) -> OracleBudget:
    return OracleBudget(
        max_free_corners=args.budget_free_corners,
        max_vertices=args.budget_vertices,
        max_grid=args.budget_grid,
    )


def oracle_instance(inst: Instance, budget: OracleBudget, engine: str = "backtrack") -> tuple[bool, str]:
    if inst.mode == "plane":
        ok, _ = enumerate_assignments(inst.graph, inst.rotation, budget)
        return ok, "enumerate_assignments"
    if not inst.graph.is_connected():
        raise InputError("graph is disconnected")
    return grid_search_drawing(inst.graph, budget, engine) is not None, "grid_search_drawing"


# -- commands --------------------------------------------------------------------


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _decide_file(path: str, mode: str | None) -> tuple[int, str]:
    try:
        ok, reason = decide_instance(load_instance(path, mode))
    except InputError as exc:
        return EXIT_INPUT, f"error: {exc}"
    return (EXIT_OK, "DRAWABLE") if ok else (EXIT_NO, f"NOT DRAWABLE: {reason}")


def cmd_decide(args) -> int:
    target = Path(args.instance)
    if target.is_dir():
        files = sorted(str(p) for p in target.glob("*.json"))
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_decide_file, files, [args.mode] * len(files)))
        for f, (code, text) in zip(files, results):
            _emit(args, {"file": f, "exit": code, "verdict": text}, f"{f}: {text}")
        return max((code for code, _ in results), default=EXIT_OK)
    inst = load_instance(args.instance, args.mode)
    ok, reason = decide_instance(inst)
    text = "DRAWABLE" if ok else f"NOT DRAWABLE: {reason}"
    _emit(args, {"drawable": ok, "reason": reason}, text)
    return EXIT_OK if ok else EXIT_NO


def cmd_draw(args) -> int:
    inst = load_instance(args.instance, args.mode)
    try:
        d = draw_instance(inst)
    except NotDrawable as exc:
        reason = exc.stage if exc.element is None else f"{exc.stage} {exc.element}"
        _emit(args, {"drawable": False, "reason": reason}, f"NOT DRAWABLE: {reason}")
        return EXIT_NO
    if args.format == "svg":
        body = render_svg(d)
    else:
        body = json.dumps(drawing_document(inst, d), indent=2, sort_keys=True) + "\n"
    if args.out:
        try:
            Path(args.out).write_text(body)
        except OSError as exc:
            raise InputError(f"{args.out}: {exc.strerror}") from None
        _emit(args, {"drawable": True, "out": args.out}, f"wrote {args.out}")
    else:
        sys.stdout.write(body)
    return EXIT_OK


def cmd_check(args) -> int:
    inst = load_instance(args.instance, args.mode)  # any rotation is ignored
    try:
        report = check_conditions(inst.graph)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    text = "C1-C3 hold" if report.ok else "\n".join(str(v) for v in report.violations)
    _emit(args, report.to_dict(), text)
    return EXIT_OK if report.ok else EXIT_NO


def cmd_oracle(args) -> int:
    inst = load_instance(args.instance, args.mode)
    try:
        ok, which = oracle_instance(inst, budget_from(args), args.engine)
    except BudgetExceeded as exc:
        raise InputError(f"budget exhausted: {exc}") from None
    except GraphError as exc:
        raise InputError(str(exc)) from None
    text = "DRAWABLE" if ok else f"NOT DRAWABLE: {which} found nothing"
    _emit(args, {"drawable": ok, "oracle": which}, text)
    return EXIT_OK if ok else EXIT_NO


def cmd_validate(args) -> int:
    inst = load_instance(args.instance, args.mode)
    data = _load_json(args.drawing)
    coords = data.get("coordinates")
    if not isinstance(coords, list) or len(coords) != inst.graph.n:
        raise InputError(f"{args.drawing}: coordinates must list one point per vertex")
    pts = []
    for i, p in enumerate(coords):
        if not (isinstance(p, list) and len(p) == 2):
            raise InputError(f"{args.drawing}: coordinates[{i}]: expected [x, y]")
        pts.append((_int(p[0], f"coordinates[{i}]"), _int(p[1], f"coordinates[{i}]")))
    report = validate_drawing(inst.graph, Drawing(inst.graph, tuple(pts)), inst.rotation, args.allow_mirror)
    _emit(args, report.to_dict(), "VALID" if report.ok else f"INVALID: {report}")
    return EXIT_OK if report.ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hvortho", description="Good orthogonal drawings of HV-labelled graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("instance", help="instance JSON file")
        sp.add_argument("--mode", choices=("plane", "outerplanar"), help="override the file's mode")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("decide", help="is the instance drawable?")
    common(sp)
    sp.add_argument("--workers", type=int, default=None, help="worker processes for a directory of instances")
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("draw", help="construct a drawing")
    common(sp)
    sp.add_argument("--out", help="output path (default: stdout)")
    sp.add_argument("--format", choices=("svg", "coords"), default="coords")
    sp.set_defaults(func=cmd_draw)

    sp = sub.add_parser("check", help="report C1-C3 for a biconnected outerplanar graph")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("oracle", help="brute-force verdict")
    common(sp)
    sp.add_argument("--budget-free-corners", type=int, default=20)
    sp.add_argument("--budget-vertices", type=int, default=12)
    sp.add_argument("--budget-grid", type=int, default=None)
    sp.add_argument("--engine", choices=("backtrack", "sat"), default="backtrack", help="grid search engine (outerplanar mode)")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("validate", help="certify a drawing file")
    common(sp)
    sp.add_argument("drawing", help="drawing JSON file with 'coordinates'")
    sp.add_argument("--allow-mirror", action="store_true", help="accept a mirrored rotation")
    sp.set_defaults(func=cmd_validate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
