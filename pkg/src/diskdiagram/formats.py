"""JSON input files and export formats.

The single input format is a JSON object with "vertices", "edges" and
"order" arrays; edges may repeat (parallel edges).  `parse` goes all
the way to a validated PoGraph, `load_graph_file` stops at the
syntactic level so files can be round-tripped without validation.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import MalformedFile, UnknownId
from .graph import PoGraph, build_graph


@dataclass(frozen=True)
class GraphFile:
    """Syntactic content of an input file, before graph validation."""

    vertices: tuple
    edges: tuple  # of (u, v) pairs, repeats meaningful
    order: tuple  # of (u, v) pairs meaning u < v


def _string_list(obj, field):
    if not isinstance(obj, list):
        raise MalformedFile(f"field '{field}' must be an array")
    for i, x in enumerate(obj):
        if not isinstance(x, str) or not x:
            raise MalformedFile(f"{field}[{i}] must be a non-empty string")
    return tuple(obj)


def _pair_list(obj, field, known):
    if not isinstance(obj, list):
        raise MalformedFile(f"field '{field}' must be an array")
    out = []
    for i, item in enumerate(obj):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, str) for x in item)
        ):
            raise MalformedFile(f"{field}[{i}] must be a pair of id strings")
        for x in item:
            if x not in known:
                raise UnknownId(x, f"{field}[{i}]")
        out.append((item[0], item[1]))
    return tuple(out)


def load_graph_file(text):
    """Parse JSON text (or bytes) into a GraphFile; syntax errors only."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedFile(f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedFile(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(doc, dict):
        raise MalformedFile("top level must be an object")
    for field in ("vertices", "edges", "order"):
        if field not in doc:
            raise MalformedFile(f"missing field '{field}'")
    extra = sorted(set(doc) - {"vertices", "edges", "order"})
    if extra:
        raise MalformedFile(f"unknown field '{extra[0]}'")
    vertices = _string_list(doc["vertices"], "vertices")
    if len(set(vertices)) != len(vertices):
        dup = next(v for i, v in enumerate(vertices) if v in vertices[:i])
        raise MalformedFile(f"duplicate vertex id '{dup}'")
    known = set(vertices)
    edges = _pair_list(doc["edges"], "edges", known)
    order = _pair_list(doc["order"], "order", known)
    return GraphFile(vertices, edges, order)


def graph_from_file(gf):
    return build_graph(list(gf.vertices), list(gf.edges), list(gf.order))


def parse(text):
    """File text straight to a validated PoGraph."""
    return graph_from_file(load_graph_file(text))


def file_of_graph(g):
    edges = tuple((e.a, e.b) for e in g.edges)
    order = tuple(sorted(g.order.pairs))
    return GraphFile(tuple(sorted(g.vertices)), edges, order)


def serialize(obj):
    """Deterministic JSON text for a GraphFile or PoGraph."""
    gf = file_of_graph(obj) if isinstance(obj, PoGraph) else obj
    doc = {
        "vertices": list(gf.vertices),
        "edges": [list(p) for p in gf.edges],
        "order": [list(p) for p in gf.order],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# DOT export


def _edge_name(e):
    return f"{e.a}--{e.b}#{e.key}"


def to_dot(g, heights=None):
    """Graphviz text; vertices of equal height share a rank."""
    lines = ["graph diagram {", "  rankdir=BT;"]
    if heights is not None:
        by_level = {}
        for v in g.vertices:
            by_level.setdefault(heights.value[v], []).append(v)
        for level in sorted(by_level):
            vs = " ".join(f'"{v}"' for v in sorted(by_level[level]))
            lines.append(f"  {{ rank=same; {vs} }}")
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for e in sorted(g.edges):
        lines.append(f'  "{e.a}" -- "{e.b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def embedding_json(emb, heights=None):
    """Machine-readable embedding: rotations, faces, coordinates."""
    doc = {
        "boundary": list(emb.decomposition.gamma.vertices),
        "rotation": {
            v: [_edge_name(e) for e in emb.rotation[v]]
            for v in sorted(emb.rotation)
        },
        "faces": [
            {
                "index": f.index,
                "outer": f.is_outer,
                "darts": [[u, _edge_name(e)] for u, e in f.darts],
                "arcs": f.arc_count() if not f.is_outer else None,
            }
            for f in emb.faces
        ],
    }
    if emb.coords is not None:
        doc["coords"] = {
            v: [round(float(p[0]), 12) + 0.0, round(float(p[1]), 12) + 0.0]
            for v, p in sorted(emb.coords.items())
        }
    if heights is not None:
        doc["heights"] = {v: heights.value[v] for v in sorted(heights.value)}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
