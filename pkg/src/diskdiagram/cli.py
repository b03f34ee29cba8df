"""Command-line interface.

Exit codes: 0 = accepted / success, 1 = input graph rejected,
2 = usage, file, or validation error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .census import (
    format_graphs_census,
    format_trees_census,
    graphs_census,
    trees_census,
)
from .conditions import is_delta_graph
from .errors import DiskDiagramError, NotDeltaGraph
from .formats import embedding_json, parse, to_dot
from .graph import DEFAULT_BUDGET
from .planarity import build_embedding, face_arcs
from .realization import assign_coords, assign_heights, extend_to_faces
from .svg import render_svg


def _budget():
    raw = os.environ.get("DELTA_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
        if value <= 0:
            raise ValueError
    except ValueError:
        raise DiskDiagramError(f"DELTA_BUDGET must be a positive integer, got {raw!r}")
    return value


def _load(path):
    try:
        text = Path(path).read_bytes()
    except OSError as exc:
        raise DiskDiagramError(f"cannot read {path}: {exc.strerror}")
    return parse(text)


def _verdict_doc(verdict, g, strict=False):
    doc = {
        "delta": verdict.delta,
        "reports": [
            {
                "condition": r.condition,
                "passed": r.passed,
                "witnesses": list(r.witnesses),
            }
            for r in verdict.reports
        ],
    }
    if verdict.delta:
        emb = assign_coords(build_embedding(verdict.decomposition))
        heights = assign_heights(
            g, verdict.decomposition, mode="strict" if strict else "default"
        )
        f = extend_to_faces(emb, heights)
        doc["embedding"] = {
            "faces": len(emb.faces),
            "inner_face_arcs": face_arcs(emb),
        }
        doc["realization"] = {
            "heights": {v: heights.value[v] for v in sorted(heights.value)},
            "boundary_extrema": len(f.boundary_extrema()),
        }
    return doc


def cmd_check(args):
    g = _load(args.file)
    verdict = is_delta_graph(g, budget=_budget())
    if args.json:
        doc = _verdict_doc(verdict, g)
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"Δ-graph: {'yes' if verdict.delta else 'no'}")
        for r in verdict.reports:
            mark = "ok" if r.passed else "FAIL"
            print(f"  {r.condition}: {mark}")
            if not r.passed:
                for w in r.witnesses[:5]:
                    print(f"    - {w}")
    return 0 if verdict.delta else 1


def cmd_realize(args):
    g = _load(args.file)
    try:
        verdict = is_delta_graph(g, budget=_budget())
        if not verdict.delta:
            bad = next(r for r in verdict.reports if not r.passed)
            raise NotDeltaGraph(bad.condition, bad.witnesses)
        emb = assign_coords(build_embedding(verdict.decomposition))
        heights = assign_heights(
            g,
            verdict.decomposition,
            mode="strict" if args.strict_order else "default",
        )
        f = extend_to_faces(emb, heights)
    except NotDeltaGraph as exc:
        print(f"not realizable: fails {exc.condition}", file=sys.stderr)
        for w in exc.witnesses[:5]:
            print(f"  - {w}", file=sys.stderr)
        return 1
    text = render_svg(f, levels=args.levels, resolution=args.resolution)
    Path(args.out).write_text(text, encoding="utf-8")
    print(f"wrote {args.out}")
    return 0


def cmd_embed(args):
    g = _load(args.file)
    verdict = is_delta_graph(g, budget=_budget())
    if not verdict.delta:
        bad = next(r for r in verdict.reports if not r.passed)
        print(f"cannot embed: fails {bad.condition}", file=sys.stderr)
        for w in bad.witnesses[:5]:
            print(f"  - {w}", file=sys.stderr)
        return 1
    emb = assign_coords(build_embedding(verdict.decomposition))
    heights = assign_heights(g, verdict.decomposition)
    if args.format == "dot":
        sys.stdout.write(to_dot(g, heights))
    else:
        sys.stdout.write(embedding_json(emb, heights))
    return 0


def cmd_enumerate(args):
    if args.mode == "trees":
        rows = trees_census(args.max, budget=_budget())
        print(format_trees_census(rows))
        return 0
    res = graphs_census(args.max, budget=_budget())
    print(format_graphs_census(res))
    return 0


def make_parser():
    p = argparse.ArgumentParser(
        prog="diskdiagram",
        description=(
            "Decide whether a partially ordered multigraph is realizable "
            "as the level diagram of a height function on the disk, and "
            "draw a witness when it is."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run the condition battery on a file")
    c.add_argument("file")
    c.add_argument("--json", action="store_true", help="machine-readable verdict")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("realize", help="render a witness height function as SVG")
    r.add_argument("file")
    r.add_argument("--out", required=True, help="output SVG path")
    r.add_argument("--levels", type=int, default=5, help="level curves to draw")
    r.add_argument("--resolution", type=int, default=64, help="contour grid size")
    r.add_argument(
        "--strict-order",
        action="store_true",
        help="equal heights for order-incomparable vertices when consistent",
    )
    r.set_defaults(func=cmd_realize)

    e = sub.add_parser("embed", help="print the disk embedding")
    e.add_argument("file")
    e.add_argument("--format", choices=("dot", "json"), default="json")
    e.set_defaults(func=cmd_embed)

    n = sub.add_parser("enumerate", help="exhaustive small-instance census")
    n.add_argument("--max", type=int, required=True, help="largest vertex count")
    n.add_argument("--mode", choices=("trees", "graphs"), default="trees")
    n.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DiskDiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
