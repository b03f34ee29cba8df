"""Constructing an explicit height function for an accepted graph.

The pipeline: quotient the vertex set into level blocks and pick a
monotone integer height per block; place the boundary cycle on the unit
circle and solve for interior tree positions; then extend the heights
continuously over every face.  Each inner face is modeled on a standard
region — a triangle for one-arc faces (one boundary extremum between
two visits of a single tree) or a square for two-arc faces (a band
between two tree levels) — and carries an explicit piecewise-linear
map onto that region; the function value is an affine function of the
model's second coordinate, so boundary traces are exact and face values
always stay between the two defining levels.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .conditions import is_delta_graph
from .errors import (
    ArcStructureViolation,
    DegenerateDrawing,
    EqualLevels,
    InvariantViolation,
    NotDeltaGraph,
    OutsideDisk,
)
from .graph import DEFAULT_BUDGET
from .orders import BinaryRelation, StrictPartialOrder, check_A4, rho_components
from .planarity import SAMPLES_PER_BOUNDARY_EDGE, build_embedding

SNAP = 1e-9


# ---------------------------------------------------------------------------
# heights


@dataclass(frozen=True)
class HeightAssignment:
    value: dict  # vertex -> float
    blocks: tuple  # tuple of frozensets, in assignment order
    block_of: dict  # vertex -> position in blocks
    mode: str

    def level(self, tree):
        return self.value[min(tree.vertices)]


def _incomparability_classes(order):
    """Connected components of the incomparability graph."""
    vs = sorted(order.carrier)
    seen = set()
    classes = []
    for v in vs:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in vs:
                if w not in comp and w != u and not order.comparable(u, w):
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        classes.append(frozenset(comp))
    return classes


def assign_heights(g, dec, mode="default", seed=None):
    """Monotone distinct heights for the level blocks of the graph.

    Blocks are each tree's vertex set plus one singleton per degree-2
    boundary vertex.  `strict` mode instead merges whole mutual-
    incomparability classes whenever the order-congruence test passes
    (falling back to the default partition otherwise), which makes
    incomparable vertices share a value.  `random` mode draws a random
    linear extension of the block order using `seed`.
    """
    if mode not in ("default", "strict", "random"):
        raise ValueError(f"unknown height mode {mode!r}")
    if mode == "strict" and check_A4(g.order).passed:
        blocks = _incomparability_classes(g.order)
    else:
        blocks = [frozenset(t.vertices) for t in dec.trees]
        blocks += [frozenset({v}) for v in dec.gamma.vertices if dec.tree_of(v) is None]
    block_of = {}
    for i, b in enumerate(blocks):
        for v in b:
            if v in block_of:
                raise InvariantViolation(f"vertex {v} lies in two level blocks")
            block_of[v] = i
    if set(block_of) != set(g.vertices):
        missing = sorted(set(g.vertices) - set(block_of))
        raise InvariantViolation(f"vertex {missing[0]} belongs to no level block")
    succ = {i: set() for i in range(len(blocks))}
    indeg = {i: 0 for i in range(len(blocks))}
    for u, v in g.order.pairs:
        bu, bv = block_of[u], block_of[v]
        if bu == bv:
            raise InvariantViolation(
                f"comparable vertices {u} < {v} fell into one level block"
            )
        if bv not in succ[bu]:
            succ[bu].add(bv)
            indeg[bv] += 1
    rep = {i: min(blocks[i]) for i in range(len(blocks))}
    available = sorted((rep[i], i) for i in indeg if indeg[i] == 0)
    rng = random.Random(seed) if mode == "random" else None
    ordered = []
    while available:
        if rng is None:
            _, i = available.pop(0)
        else:
            _, i = available.pop(rng.randrange(len(available)))
        ordered.append(i)
        for j in sorted(succ[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                entry = (rep[j], j)
                lo, hi = 0, len(available)
                while lo < hi:
                    mid = (lo + hi) // 2
                    if available[mid] < entry:
                        lo = mid + 1
                    else:
                        hi = mid
                available.insert(lo, entry)
    if len(ordered) != len(blocks):
        raise InvariantViolation("level-block order contains a cycle")
    height_of_block = {i: float(step) for step, i in enumerate(ordered)}
    value = {v: height_of_block[block_of[v]] for v in g.vertices}
    for u, v in g.order.pairs:
        if not value[u] < value[v]:
            raise InvariantViolation(f"heights are not monotone on {u} < {v}")
    blocks_ordered = tuple(blocks[i] for i in ordered)
    block_pos = {v: k for k, b in enumerate(blocks_ordered) for v in b}
    return HeightAssignment(value, blocks_ordered, block_pos, mode)


def induced_order(heights):
    """The strict partial order obtained by comparing assigned values."""
    vs = sorted(heights.value)
    pairs = {
        (u, v) for u in vs for v in vs if heights.value[u] < heights.value[v]
    }
    return StrictPartialOrder.from_pairs(frozenset(vs), frozenset(pairs))


# ---------------------------------------------------------------------------
# coordinates


def _gamma_positions(gamma):
    n = len(gamma.vertices)
    out = {}
    for i, v in enumerate(gamma.vertices):
        th = math.pi / 2 + 2 * math.pi * i / n
        out[v] = np.array([math.cos(th), math.sin(th)])
    return out


def _solve_tree_positions(tree, fixed):
    """Place interior tree vertices at the average of their neighbors."""
    interior = sorted(tree.vertices - tree.attach)
    if not interior:
        return {}
    idx = {v: i for i, v in enumerate(interior)}
    k = len(interior)
    a = np.zeros((k, k))
    b = np.zeros((k, 2))
    for v in interior:
        i = idx[v]
        nbrs = [e.other(v) for e in tree.incident(v)]
        a[i, i] = len(nbrs)
        for w in nbrs:
            if w in idx:
                a[i, idx[w]] -= 1.0
            else:
                b[i] += fixed[w]
    sol = np.linalg.solve(a, b)
    return {v: sol[idx[v]] for v in interior}


def _seg_point_dist(p, a, b):
    d = b - a
    L2 = float(d @ d)
    if L2 == 0.0:
        return float(np.hypot(*(p - a)))
    t = float((p - a) @ d) / L2
    t = min(1.0, max(0.0, t))
    q = a + t * d
    return float(np.hypot(*(p - q)))


def _cross2(u, v):
    return float(u[0] * v[1] - u[1] * v[0])


def _segments_cross(p1, p2, p3, p4, eps=1e-12):
    """Closed-segment intersection test for segments with no shared ends."""
    d1 = _cross2(p4 - p3, p1 - p3)
    d2 = _cross2(p4 - p3, p2 - p3)
    d3 = _cross2(p2 - p1, p3 - p1)
    d4 = _cross2(p2 - p1, p4 - p1)
    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and (
        (d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)
    ):
        return True
    for p, a, b in ((p1, p3, p4), (p2, p3, p4), (p3, p1, p2), (p4, p1, p2)):
        if _seg_point_dist(p, a, b) <= eps:
            return True
    return False


def _tree_segments(dec, coords):
    segs = []
    for t in dec.trees:
        for e in sorted(t.edges):
            segs.append((e, coords[e.a], coords[e.b]))
    return segs


def _coords_valid(dec, coords):
    names = sorted(coords)
    pts = [coords[v] for v in names]
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            if float(np.hypot(*(pts[i] - pts[j]))) <= SNAP:
                return False
    for t in dec.trees:
        for v in t.vertices - t.attach:
            if float(np.hypot(*coords[v])) >= 1.0 - 1e-7:
                return False
    segs = _tree_segments(dec, coords)
    for i in range(len(segs)):
        e1, a1, b1 = segs[i]
        for v in names:
            if v in (e1.a, e1.b):
                continue
            if _seg_point_dist(coords[v], a1, b1) <= SNAP:
                return False
        for j in range(i + 1, len(segs)):
            e2, a2, b2 = segs[j]
            shared = {e1.a, e1.b} & {e2.a, e2.b}
            if shared:
                v = shared.pop()
                u1 = coords[e1.other(v)] - coords[v]
                u2 = coords[e2.other(v)] - coords[v]
                if abs(_cross2(u1, u2)) <= 1e-12 and float(u1 @ u2) > 0:
                    return False
            elif _segments_cross(a1, b1, a2, b2):
                return False
    return True


def assign_coords(emb):
    """Unit-circle boundary placement plus interior averaging per tree.

    If the averaged drawing degenerates (coincident points, crossings,
    or an edge passing through a foreign vertex), the solve is retried
    with slightly perturbed anchor angles; a second failure raises
    DegenerateDrawing.
    """
    dec = emb.decomposition
    base = _gamma_positions(dec.gamma)
    coords = {v: p.copy() for v, p in base.items()}
    for t in dec.trees:
        coords.update(_solve_tree_positions(t, base))
    if _coords_valid(dec, coords):
        return emb.with_coords(coords)
    n = len(dec.gamma.vertices)
    jittered = {}
    for i, v in enumerate(dec.gamma.vertices):
        th = math.pi / 2 + 2 * math.pi * i / n + 1e-3 * (i + 1)
        jittered[v] = np.array([math.cos(th), math.sin(th)])
    coords = {v: p.copy() for v, p in base.items()}
    for t in dec.trees:
        coords.update(_solve_tree_positions(t, jittered))
    if _coords_valid(dec, coords):
        return emb.with_coords(coords)
    raise DegenerateDrawing("tree placement produced a degenerate drawing")


# ---------------------------------------------------------------------------
# faces


@dataclass(frozen=True)
class FaceMap:
    face_index: int
    kind: str  # "one_arc" | "two_arc"
    levels: tuple  # one_arc: (c, c_tree); two_arc: (c_bottom, c_top)
    tree_sides: tuple  # ((tree_index, own_level, other_level), ...)
    extremum_vertex: str | None
    points: np.ndarray  # (N, 2) polygon, counterclockwise
    values: np.ndarray  # (N,)
    model: np.ndarray  # (N, 2) image in the model region
    triangles: np.ndarray  # (M, 3) indices into points


def _ear_clip(pts, vals):
    """Triangulate a simple counterclockwise polygon.

    Among the available ears, one spanning two distinct values is
    preferred, which keeps constant-value triangles rare; zero-area
    triangles are dropped.
    """
    xs = [float(p[0]) for p in pts]
    ys = [float(p[1]) for p in pts]
    vs = [float(v) for v in vals]
    idx = list(range(len(pts)))
    tris = []

    def cross(i0, i1, i2):
        return (xs[i1] - xs[i0]) * (ys[i2] - ys[i0]) - (ys[i1] - ys[i0]) * (
            xs[i2] - xs[i0]
        )

    def in_tri(j, i0, i1, i2):
        eps = 1e-12
        s1 = (xs[i1] - xs[i0]) * (ys[j] - ys[i0]) - (ys[i1] - ys[i0]) * (
            xs[j] - xs[i0]
        )
        s2 = (xs[i2] - xs[i1]) * (ys[j] - ys[i1]) - (ys[i2] - ys[i1]) * (
            xs[j] - xs[i1]
        )
        s3 = (xs[i0] - xs[i2]) * (ys[j] - ys[i2]) - (ys[i0] - ys[i2]) * (
            xs[j] - xs[i2]
        )
        return s1 >= -eps and s2 >= -eps and s3 >= -eps

    def emit(i0, i1, i2):
        if abs(cross(i0, i1, i2)) > 1e-14:
            tris.append((i0, i1, i2))

    while len(idx) > 3:
        m = len(idx)
        chosen = None
        fallback = None
        for k in range(m):
            i0, i1, i2 = idx[k - 1], idx[k], idx[(k + 1) % m]
            if cross(i0, i1, i2) <= 1e-14:
                continue
            blocked = False
            for j in idx:
                if j not in (i0, i1, i2) and in_tri(j, i0, i1, i2):
                    blocked = True
                    break
            if blocked:
                continue
            if not (vs[i0] == vs[i1] == vs[i2]):
                chosen = k
                break
            if fallback is None:
                fallback = k
        if chosen is None:
            chosen = fallback
        if chosen is None:
            raise DegenerateDrawing("cannot triangulate a face polygon")
        k = chosen
        emit(idx[k - 1], idx[k], idx[(k + 1) % len(idx)])
        del idx[k]
    emit(*idx)
    if not tris:
        raise DegenerateDrawing("face polygon has no area")
    return np.array(tris, dtype=int)


def _rotated_runs(face):
    runs = list(face.runs)
    for s in range(len(runs)):
        if runs[s][0] == "arc":
            return runs[s:] + runs[:s]
    raise ArcStructureViolation(face.index, "face has no boundary arc")


def _path_level(darts, heights, face_index):
    vs = [u for u, _ in darts] + [darts[-1][1].other(darts[-1][0])]
    levels = {heights.value[v] for v in vs}
    if len(levels) != 1:
        raise InvariantViolation(
            f"face {face_index}: tree path visits several levels {sorted(levels)}"
        )
    return levels.pop()


def _arc_points(dart, emb, heights, gamma_pos, n):
    """Sample positions/values along one boundary edge, endpoint excluded."""
    u, e = dart
    w = e.other(u)
    if (gamma_pos[w] - gamma_pos[u]) % n != 1:
        raise InvariantViolation("inner face traverses the boundary backwards")
    th0 = math.pi / 2 + 2 * math.pi * gamma_pos[u] / n
    step = 2 * math.pi / n
    hu, hw = heights.value[u], heights.value[w]
    pts, vals = [], []
    for s in range(SAMPLES_PER_BOUNDARY_EDGE):
        t = s / SAMPLES_PER_BOUNDARY_EDGE
        th = th0 + t * step
        pts.append((math.cos(th), math.sin(th)))
        vals.append((1 - t) * hu + t * hw)
    return pts, vals


def _path_points(darts, emb):
    """Positions along a tree path, final endpoint excluded, with length."""
    coords = emb.coords
    pts = [tuple(coords[u]) for u, _ in darts]
    seglens = []
    for u, e in darts:
        w = e.other(u)
        seglens.append(float(np.hypot(*(coords[w] - coords[u]))))
    return pts, seglens


def _build_one_arc(face, emb, heights, gamma_pos, n, dec):
    runs = _rotated_runs(face)
    if len(runs) != 2 or runs[0][0] != "arc" or runs[1][0] != "path":
        raise ArcStructureViolation(face.index, "expected one arc and one path")
    arc, path = runs[0][1], runs[1][1]
    inner = [d[1].other(d[0]) for d in arc[:-1]]
    g = dec.graph
    extrema = [v for v in inner if g.degree(v) == 2]
    if len(arc) != 2 or len(extrema) != 1:
        raise ArcStructureViolation(
            face.index,
            f"one-arc face needs exactly one interior degree-2 vertex on a "
            f"two-edge arc, found {len(extrema)} on {len(arc)} edges",
        )
    y_vertex = extrema[0]
    c = heights.value[y_vertex]
    c_i = _path_level(path, heights, face.index)
    if c == c_i:
        raise InvariantViolation(f"face {face.index}: extremum level equals tree level")
    tree = dec.tree_of(path[0][0])
    pts, vals, model = [], [], []
    for k, dart in enumerate(arc):
        ps, vs = _arc_points(dart, emb, heights, gamma_pos, n)
        for p, val in zip(ps, vs):
            psi = (val - c) / (c_i - c)
            pts.append(p)
            vals.append(val)
            model.append((0.0, psi) if k == 0 else (psi, psi))
    ppts, seglens = _path_points(path, emb)
    total = sum(seglens) or 1.0
    walked = 0.0
    for p, L in zip(ppts, seglens):
        pts.append(p)
        vals.append(c_i)
        model.append((1.0 - walked / total, 1.0))
        walked += L
    pts = np.array(pts)
    vals = np.array(vals)
    model = np.array(model)
    tris = _ear_clip(pts, vals)
    return FaceMap(
        face.index,
        "one_arc",
        (c, c_i),
        ((tree.index, c_i, c),),
        y_vertex,
        pts,
        vals,
        model,
        tris,
    )


def _build_two_arc(face, emb, heights, gamma_pos, n, dec):
    runs = _rotated_runs(face)
    kinds = [k for k, _ in runs]
    if kinds == ["arc", "arc"]:
        arc_a, arc_b = runs[0][1], runs[1][1]
        path_p = path_q = ()
    elif kinds == ["arc", "path", "arc", "path"]:
        arc_a, path_p, arc_b, path_q = (r[1] for r in runs)
    else:
        raise ArcStructureViolation(face.index, f"unexpected run pattern {kinds}")
    if path_q:
        c_bottom = _path_level(path_q, heights, face.index)
    else:
        c_bottom = heights.value[arc_a[0][0]]
    if path_p:
        c_top = _path_level(path_p, heights, face.index)
    else:
        c_top = heights.value[arc_b[0][0]]
    if c_bottom == c_top:
        raise EqualLevels(face.index, c_bottom)
    sides = []
    if path_q:
        sides.append((dec.tree_of(path_q[0][0]).index, c_bottom, c_top))
    if path_p:
        sides.append((dec.tree_of(path_p[0][0]).index, c_top, c_bottom))
    span = c_top - c_bottom
    pts, vals, model = [], [], []
    for dart in arc_a:
        ps, vs = _arc_points(dart, emb, heights, gamma_pos, n)
        for p, val in zip(ps, vs):
            pts.append(p)
            vals.append(val)
            model.append((1.0, (val - c_bottom) / span))
    if path_p:
        ppts, seglens = _path_points(path_p, emb)
        total = sum(seglens) or 1.0
        walked = 0.0
        for p, L in zip(ppts, seglens):
            pts.append(p)
            vals.append(c_top)
            model.append((1.0 - walked / total, 1.0))
            walked += L
    for dart in arc_b:
        ps, vs = _arc_points(dart, emb, heights, gamma_pos, n)
        for p, val in zip(ps, vs):
            pts.append(p)
            vals.append(val)
            model.append((0.0, (val - c_bottom) / span))
    if path_q:
        ppts, seglens = _path_points(path_q, emb)
        total = sum(seglens) or 1.0
        walked = 0.0
        for p, L in zip(ppts, seglens):
            pts.append(p)
            vals.append(c_bottom)
            model.append((walked / total, 0.0))
            walked += L
    pts = np.array(pts)
    vals = np.array(vals)
    model = np.array(model)
    tris = _ear_clip(pts, vals)
    return FaceMap(
        face.index,
        "two_arc",
        (c_bottom, c_top),
        tuple(sides),
        None,
        pts,
        vals,
        model,
        tris,
    )


def extend_to_faces(emb, heights):
    """Build the face maps and bundle everything into a DiskFunction."""
    if emb.coords is None:
        emb = assign_coords(emb)
    dec = emb.decomposition
    gamma = dec.gamma
    n = len(gamma.vertices)
    gamma_pos = {v: i for i, v in enumerate(gamma.vertices)}
    maps = []
    for face in emb.faces:
        if face.is_outer:
            continue
        arcs = face.arc_count()
        if arcs == 1:
            maps.append(_build_one_arc(face, emb, heights, gamma_pos, n, dec))
        elif arcs == 2:
            maps.append(_build_two_arc(face, emb, heights, gamma_pos, n, dec))
        else:
            raise ArcStructureViolation(face.index, f"face has {arcs} boundary arcs")
    return DiskFunction(emb, heights, tuple(maps))


# ---------------------------------------------------------------------------
# the assembled function


class DiskFunction:
    """Immutable continuous extension of a height assignment to the disk."""

    def __init__(self, embedding, heights, face_maps):
        self.embedding = embedding
        self.heights = heights
        self.face_maps = face_maps
        self.map_by_face = {fm.face_index: fm for fm in face_maps}
        dec = embedding.decomposition
        self.decomposition = dec
        self.gamma = dec.gamma
        n = len(self.gamma.vertices)
        self._n = n
        self._gamma_heights = np.array(
            [heights.value[v] for v in self.gamma.vertices]
        )
        names = sorted(embedding.coords)
        self._vertex_names = names
        self._vertex_xy = np.array([embedding.coords[v] for v in names])
        self._vertex_vals = np.array([heights.value[v] for v in names])
        segs = _tree_segments(dec, embedding.coords)
        self._seg_a = np.array([a for _, a, _ in segs]).reshape(-1, 2)
        self._seg_b = np.array([b for _, _, b in segs]).reshape(-1, 2)
        self._seg_val = np.array([heights.value[e.a] for e, _, _ in segs])

    # -- evaluation --------------------------------------------------------

    def _rim_values(self, pts):
        th = np.arctan2(pts[:, 1], pts[:, 0])
        pos = (th - math.pi / 2) / (2 * math.pi / self._n)
        pos = np.mod(pos, self._n)
        i = np.floor(pos).astype(int) % self._n
        t = pos - np.floor(pos)
        h0 = self._gamma_heights[i]
        h1 = self._gamma_heights[(i + 1) % self._n]
        return (1 - t) * h0 + t * h1

    def _snap_values(self, pts):
        """Vertex and tree-edge snapping; NaN where no snap applies."""
        out = np.full(len(pts), np.nan)
        d = np.linalg.norm(pts[:, None, :] - self._vertex_xy[None, :, :], axis=2)
        j = np.argmin(d, axis=1)
        hit = d[np.arange(len(pts)), j] <= SNAP
        out[hit] = self._vertex_vals[j[hit]]
        if len(self._seg_a):
            ab = self._seg_b - self._seg_a
            L2 = np.maximum((ab * ab).sum(axis=1), 1e-300)
            ap = pts[:, None, :] - self._seg_a[None, :, :]
            t = np.clip((ap * ab[None, :, :]).sum(axis=2) / L2[None, :], 0.0, 1.0)
            q = self._seg_a[None, :, :] + t[:, :, None] * ab[None, :, :]
            dist = np.linalg.norm(pts[:, None, :] - q, axis=2)
            k = np.argmin(dist, axis=1)
            near = dist[np.arange(len(pts)), k] <= SNAP
            fill = np.isnan(out) & near
            out[fill] = self._seg_val[k[fill]]
        return out

    @staticmethod
    def _points_in_polygon(pts, poly):
        x = pts[:, 0][:, None]
        y = pts[:, 1][:, None]
        x1 = poly[:, 0][None, :]
        y1 = poly[:, 1][None, :]
        x2 = np.roll(poly[:, 0], -1)[None, :]
        y2 = np.roll(poly[:, 1], -1)[None, :]
        cond = ((y1 <= y) & (y2 > y)) | ((y2 <= y) & (y1 > y))
        denom = np.where(np.abs(y2 - y1) < 1e-300, 1.0, y2 - y1)
        t = (y - y1) / denom
        xs = x1 + t * (x2 - x1)
        crossings = (cond & (xs > x)).sum(axis=1)
        return crossings % 2 == 1

    def evaluate_in_face(self, face_index, pts, eps=1e-9):
        """Values of points known to lie in the closure of one face."""
        fm = self.map_by_face[face_index]
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        out = np.full(len(pts), np.nan)
        p = fm.points
        v = fm.values
        for i0, i1, i2 in fm.triangles:
            rem = np.isnan(out)
            if not rem.any():
                break
            a, b, c = p[i0], p[i1], p[i2]
            det = _cross2(b - a, c - a)
            if abs(det) < 1e-300:
                continue
            qa = pts[rem] - a
            w1 = (qa[:, 0] * (c - a)[1] - qa[:, 1] * (c - a)[0]) / det
            w2 = (qa[:, 1] * (b - a)[0] - qa[:, 0] * (b - a)[1]) / det
            ok = (w1 >= -eps) & (w2 >= -eps) & (w1 + w2 <= 1 + eps)
            vals = v[i0] + w1 * (v[i1] - v[i0]) + w2 * (v[i2] - v[i0])
            tmp = out[rem]
            tmp[ok] = vals[ok]
            out[rem] = tmp
        missing = np.isnan(out)
        if missing.any():
            out[missing] = self._nearest_edge_values(pts[missing], [fm])
        return out

    def _nearest_edge_values(self, pts, face_maps):
        out = np.empty(len(pts))
        for i, q in enumerate(pts):
            best = (math.inf, 0.0)
            for fm in face_maps:
                poly = fm.points
                vals = fm.values
                nxt = np.roll(np.arange(len(poly)), -1)
                for j in range(len(poly)):
                    a, b = poly[j], poly[nxt[j]]
                    d = b - a
                    L2 = float(d @ d)
                    t = 0.0 if L2 == 0 else min(1.0, max(0.0, float((q - a) @ d) / L2))
                    proj = a + t * d
                    dist = float(np.hypot(*(q - proj)))
                    if dist < best[0]:
                        val = (1 - t) * vals[j] + t * vals[nxt[j]]
                        best = (dist, val)
            out[i] = best[1]
        return out

    def evaluate_many(self, pts, clip=False):
        """Vectorized evaluation; `clip` maps outside points to the rim."""
        pts = np.atleast_2d(np.asarray(pts, dtype=float)).copy()
        r = np.linalg.norm(pts, axis=1)
        if clip:
            far = r > 1.0
            if far.any():
                pts[far] /= r[far][:, None]
                r[far] = 1.0
        elif (r > 1 + SNAP).any():
            bad = pts[r > 1 + SNAP][0]
            raise OutsideDisk((float(bad[0]), float(bad[1])))
        out = self._snap_values(pts)
        rim = np.isnan(out) & (np.abs(r - 1.0) <= SNAP)
        if rim.any():
            out[rim] = self._rim_values(pts[rim])
        for fm in self.face_maps:
            rem = np.isnan(out)
            if not rem.any():
                break
            inside = self._points_in_polygon(pts[rem], fm.points)
            if inside.any():
                sel = np.where(rem)[0][inside]
                out[sel] = self.evaluate_in_face(fm.face_index, pts[sel])
        missing = np.isnan(out)
        if missing.any():
            out[missing] = self._nearest_edge_values(pts[missing], self.face_maps)
        return out

    def evaluate(self, p):
        p = np.asarray(p, dtype=float)
        if float(np.hypot(*p)) > 1 + SNAP:
            raise OutsideDisk((float(p[0]), float(p[1])))
        return float(self.evaluate_many(p.reshape(1, 2))[0])

    # -- structure reports --------------------------------------------------

    def boundary_extrema(self):
        """Boundary vertices that are local extrema along the circle."""
        vs = self.gamma.vertices
        n = len(vs)
        h = self._gamma_heights
        out = []
        for i, v in enumerate(vs):
            prev_h = h[(i - 1) % n]
            next_h = h[(i + 1) % n]
            if h[i] > prev_h and h[i] > next_h:
                out.append((v, "max"))
            elif h[i] < prev_h and h[i] < next_h:
                out.append((v, "min"))
        return out

    def tree_levels(self):
        return {
            t.index: self.heights.level(t) for t in self.decomposition.trees
        }


def realize(g, mode="default", seed=None, budget=DEFAULT_BUDGET):
    """Full pipeline: decide, embed, place, lift; raises NotDeltaGraph."""
    verdict = is_delta_graph(g, budget=budget)
    if not verdict.delta:
        bad = next(r for r in verdict.reports if not r.passed)
        raise NotDeltaGraph(bad.condition, bad.witnesses)
    heights = assign_heights(g, verdict.decomposition, mode=mode, seed=seed)
    emb = assign_coords(build_embedding(verdict.decomposition))
    return extend_to_faces(emb, heights)


# ---------------------------------------------------------------------------
# level sets


def _stitch_segments(segments):
    """Join segments sharing endpoints into maximal polylines."""

    def key(p):
        return (round(p[0], 7), round(p[1], 7))

    ends = {}
    polylines = []
    used = [False] * len(segments)
    by_end = {}
    for i, (a, b) in enumerate(segments):
        by_end.setdefault(key(a), []).append(i)
        by_end.setdefault(key(b), []).append(i)
    for start in range(len(segments)):
        if used[start]:
            continue
        used[start] = True
        a, b = segments[start]
        chain = [a, b]
        for head, append in ((chain[-1], True), (chain[0], False)):
            cur = head
            while True:
                cands = [i for i in by_end.get(key(cur), []) if not used[i]]
                if not cands:
                    break
                i = cands[0]
                used[i] = True
                pa, pb = segments[i]
                nxt = pb if key(pa) == key(cur) else pa
                if append:
                    chain.append(nxt)
                else:
                    chain.insert(0, nxt)
                cur = nxt
        polylines.append(chain)
    polylines.sort(key=lambda ch: (round(ch[0][0], 7), round(ch[0][1], 7)))
    return polylines


def _cell_segments(x0, x1, y0, y1, g00, g10, g11, g01):
    """Marching-squares segments for one grid cell of f - c values."""
    corners = [
        ((x0, y0), g00),
        ((x1, y0), g10),
        ((x1, y1), g11),
        ((x0, y1), g01),
    ]
    code = 0
    for k, (_, gv) in enumerate(corners):
        if gv > 0:
            code |= 1 << k
    if code in (0, 15):
        return []

    def lerp(pa, ga, pb, gb):
        t = ga / (ga - gb) if ga != gb else 0.5
        return (pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1]))

    edge_pts = {}
    sides = [(0, 1), (1, 2), (2, 3), (3, 0)]
    for s, (i, j) in enumerate(sides):
        (pa, ga), (pb, gb) = corners[i], corners[j]
        if (ga > 0) != (gb > 0):
            edge_pts[s] = lerp(pa, ga, pb, gb)
    crossed = sorted(edge_pts)
    if len(crossed) == 2:
        return [(edge_pts[crossed[0]], edge_pts[crossed[1]])]
    if len(crossed) == 4:
        center = (g00 + g10 + g11 + g01) / 4.0
        if (center > 0) == (g00 > 0):
            return [
                (edge_pts[0], edge_pts[1]),
                (edge_pts[2], edge_pts[3]),
            ]
        return [
            (edge_pts[3], edge_pts[0]),
            (edge_pts[1], edge_pts[2]),
        ]
    return []


def level_set(f, c, resolution=64):
    """Polylines of the level {f = c}, trees included exactly.

    Marching squares runs on a grid covering the disk (values outside
    are taken radially from the rim); whenever `c` matches a tree level
    the exact tree segments are added as well.
    """
    polylines = []
    dec = f.decomposition
    coords = f.embedding.coords
    exact = []
    for t in dec.trees:
        if abs(f.heights.level(t) - c) <= SNAP:
            segs = [
                (tuple(coords[e.a]), tuple(coords[e.b])) for e in sorted(t.edges)
            ]
            exact.extend((np.array(a), np.array(b)) for a, b in segs)
            polylines.extend(_stitch_segments(segs))
    xs = np.linspace(-1.02, 1.02, resolution + 1)
    gx, gy = np.meshgrid(xs, xs)
    grid = np.column_stack([gx.ravel(), gy.ravel()])
    vals = f.evaluate_many(grid, clip=True).reshape(gx.shape) - c
    segments = []
    for i in range(resolution):
        for j in range(resolution):
            segs = _cell_segments(
                xs[j],
                xs[j + 1],
                xs[i],
                xs[i + 1],
                vals[i, j],
                vals[i, j + 1],
                vals[i + 1, j + 1],
                vals[i + 1, j],
            )
            for a, b in segs:
                ra, rb = math.hypot(*a), math.hypot(*b)
                if ra > 1 and rb > 1:
                    continue
                if ra > 1:
                    a = (a[0] / ra, a[1] / ra)
                if rb > 1:
                    b = (b[0] / rb, b[1] / rb)
                if math.hypot(a[0] - b[0], a[1] - b[1]) <= 1e-12:
                    continue
                if exact:
                    # grid approximations of an exactly drawn tree are noise
                    mid = np.array([(a[0] + b[0]) / 2, (a[1] + b[1]) / 2])
                    cell = 2.04 / resolution * 1.5
                    if any(
                        _seg_point_dist(mid, sa, sb) <= cell for sa, sb in exact
                    ):
                        continue
                segments.append((a, b))
    polylines.extend(_stitch_segments(segments))
    return polylines


# ---------------------------------------------------------------------------
# sign census


@dataclass(frozen=True)
class CensusResult:
    passed: bool
    witnesses: tuple
    corner_signs: dict  # vertex -> tuple of face signs in rotation order

    def __bool__(self):
        return self.passed


def _face_tree_signs(face_maps):
    signs = {}
    for fm in face_maps:
        for tree_index, own, other in fm.tree_sides:
            signs[(fm.face_index, tree_index)] = 1 if other > own else -1
    return signs


def sign_census(f, dec=None):
    """Alternation of face signs around every tree vertex.

    Every face touching a tree is above or below its level; around an
    interior tree vertex the incident faces must alternate in rotation
    order (an even cycle), and at a boundary attachment the chain of
    inner corners must alternate with end signs dictated by the two
    boundary neighbors — opposite ends for odd degree, equal ends for
    even degree.
    """
    emb = f.embedding
    if dec is None:
        dec = emb.decomposition
    g = dec.graph
    heights = f.heights
    face_sign = _face_tree_signs(f.face_maps)
    witnesses = []
    corner_signs = {}
    for t in dec.trees:
        c_k = heights.level(t)
        for v in sorted(t.vertices):
            rot = emb.rotation[v]
            if v in t.attach:
                corner_darts = [(v, e) for e in rot[:-1]]
            else:
                corner_darts = [(v, e) for e in rot]
            faces = [emb.dart_face[d] for d in corner_darts]
            signs = []
            missing = False
            for fi in faces:
                s = face_sign.get((fi, t.index))
                if s is None:
                    witnesses.append(
                        f"face {fi} at vertex {v} carries no sign for tree {t.index}"
                    )
                    missing = True
                    break
                signs.append(s)
            if missing:
                continue
            corner_signs[v] = tuple(signs)
            m = len(signs)
            items = frozenset(range(m))
            if v in t.attach:
                pairs = frozenset((i, i + 1) for i in range(m - 1))
            else:
                pairs = frozenset((i, (i + 1) % m) for i in range(m))
            rel = BinaryRelation.of(items, pairs)
            comps = rho_components(rel)
            if len(comps) != 1:
                witnesses.append(f"corner relation at {v} is not a single component")
                continue
            comp = comps[0]
            seq = [signs[i] for i in comp.items]
            closed = comp.kind == "cycle"
            for i in range(len(seq) - (0 if closed else 1)):
                if seq[i] == seq[(i + 1) % len(seq)]:
                    witnesses.append(
                        f"signs around {v} fail to alternate at position {i}"
                    )
                    break
            if v in t.attach:
                if comp.kind != "chain":
                    witnesses.append(f"corner relation at {v} should be a chain")
                    continue
                d = g.degree(v)
                if d % 2 == 1 and seq[0] == seq[-1]:
                    witnesses.append(
                        f"odd-degree vertex {v}: chain ends carry equal signs"
                    )
                if d % 2 == 0 and seq[0] != seq[-1]:
                    witnesses.append(
                        f"even-degree vertex {v}: chain ends carry opposite signs"
                    )
                i_gamma = dec.gamma.vertices.index(v)
                nxt = dec.gamma.vertices[(i_gamma + 1) % len(dec.gamma.vertices)]
                prv = dec.gamma.vertices[i_gamma - 1]
                want_first = 1 if heights.value[nxt] > c_k else -1
                want_last = 1 if heights.value[prv] > c_k else -1
                if seq[0] != want_first:
                    witnesses.append(
                        f"first corner at {v} has sign {seq[0]}, expected "
                        f"{want_first} from neighbor {nxt}"
                    )
                if seq[-1] != want_last:
                    witnesses.append(
                        f"last corner at {v} has sign {seq[-1]}, expected "
                        f"{want_last} from neighbor {prv}"
                    )
            else:
                if comp.kind != "cycle":
                    witnesses.append(f"corner relation at {v} should be a cycle")
                if len(seq) % 2 == 1:
                    witnesses.append(f"odd face count around interior vertex {v}")
    return CensusResult(not witnesses, tuple(witnesses), corner_signs)
