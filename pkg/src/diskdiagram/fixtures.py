"""Small named example graphs used by tests, scripts, and documentation.

Each entry is (vertices, edges, order) in plain tuples; `build` turns
one into a validated PoGraph.  The first three are accepted inputs of
increasing complexity; the rest exercise specific rejection paths.
"""
from __future__ import annotations

from .graph import build_graph


def _ring(names):
    return [(names[i], names[(i + 1) % len(names)]) for i in range(len(names))]


def _g1():
    vs = "m a b M".split()
    es = [("m", "a"), ("m", "b"), ("a", "M"), ("b", "M"), ("a", "b")]
    order = [("m", "a"), ("m", "b"), ("a", "M"), ("b", "M")]
    return vs, es, order


def _g3():
    ring = ["w1", "M1", "w2", "m1", "w3", "M2", "w4", "m2"]
    vs = ring + ["c"]
    es = _ring(ring) + [("c", w) for w in ("w1", "w2", "w3", "w4")]
    mid = ["w1", "w2", "w3", "w4", "c"]
    order = [(m, x) for m in ("m1", "m2") for x in mid]
    order += [(x, big) for x in mid for big in ("M1", "M2")]
    return vs, es, order


def _g4():
    vs = "m a1 a2 M b2 b1".split()
    es = _ring(["m", "a1", "a2", "M", "b2", "b1"]) + [("a1", "b1"), ("a2", "b2")]
    order = [
        ("m", "a1"), ("m", "b1"), ("a1", "a2"), ("a1", "b2"),
        ("b1", "a2"), ("b1", "b2"), ("a2", "M"), ("b2", "M"),
    ]
    return vs, es, order


def _interleaved():
    vs = "a1 a2 b1 b2".split()
    es = _ring(["a1", "a2", "b1", "b2"]) + [("a1", "b1"), ("a2", "b2")]
    order = [("a1", "a2"), ("b1", "a2"), ("b1", "b2"), ("a1", "b2")]
    return vs, es, order


def _double_saddle():
    ring = ["m1", "w1", "M1", "w2", "m2", "w3", "M2", "w4"]
    es = _ring(ring) + [("w1", "w2"), ("w3", "w4")]
    order = [(m, w) for m in ("m1", "m2") for w in ("w1", "w2", "w3", "w4")]
    order += [("w1", "M1"), ("w2", "M1"), ("w3", "M2"), ("w4", "M2")]
    return ring, es, order


def _hybrid():
    ring = ["m1", "a1", "a2", "M2", "b2", "b1", "m2", "c1", "M1", "d1"]
    vs = ring + ["u"]
    es = _ring(ring) + [("u", x) for x in ("a1", "b1", "c1", "d1")] + [("a2", "b2")]
    star = ["a1", "b1", "c1", "d1", "u"]
    order = [(m, x) for m in ("m1", "m2") for x in star]
    order += [(x, "M1") for x in star]
    order += [(x, y) for x in star for y in ("a2", "b2")]
    order += [("a2", "M2"), ("b2", "M2")]
    return vs, es, order


def _bare2():
    return ["x", "y"], [("x", "y"), ("x", "y")], [("x", "y")]


def _even_attach():
    """Path tree a-c-b with all three vertices on the circle; c has
    even degree 4 and is a local minimum among its circle neighbors."""
    ring = ["m", "a", "M1", "c", "M2", "b"]
    es = _ring(ring) + [("a", "c"), ("c", "b")]
    level = {"m": 0, "a": 1, "c": 1, "b": 1, "M1": 2, "M2": 2}
    order = [
        (u, v) for u in ring for v in ring if level[u] < level[v]
    ]
    return ring, es, order


def _three_chord():
    """Nested chords whose outermost boundary pair has its two inner
    neighbors in two different trees: rejected by the coherence check."""
    ring = ["a1", "a2", "x", "b2", "w", "a3", "y", "b3", "b1", "z"]
    es = _ring(ring) + [("a1", "b1"), ("a2", "b2"), ("a3", "b3")]
    level = {
        "z": -1, "a1": 0, "b1": 0, "w": 0,
        "a2": 1, "b2": 1, "a3": 1, "b3": 1, "x": 2, "y": 2,
    }
    order = [
        (u, v) for u in ring for v in ring if level[u] < level[v]
    ]
    return ring, es, order


def _g1_missing_pair():
    vs, es, order = _g1()
    return vs, es, [p for p in order if p != ("b", "M")]


FIXTURES = {
    "G1": _g1,
    "G3": _g3,
    "G4": _g4,
    "interleaved": _interleaved,
    "double_saddle": _double_saddle,
    "hybrid": _hybrid,
    "bare2": _bare2,
    "even_attach": _even_attach,
    "three_chord": _three_chord,
    "g1_missing": _g1_missing_pair,
}

# expected outcome: (is_delta, first failing condition or None)
EXPECTED = {
    "G1": (True, None),
    "G3": (True, None),
    "G4": (True, None),
    "interleaved": (False, "S2"),
    "double_saddle": (False, "S3"),
    "hybrid": (True, None),
    "bare2": (True, None),
    "even_attach": (True, None),
    "three_chord": (False, "S3"),
    "g1_missing": (False, "A1"),
}


def raw(name):
    return FIXTURES[name]()


def build(name):
    return build_graph(*FIXTURES[name]())
