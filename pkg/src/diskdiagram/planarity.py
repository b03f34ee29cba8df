"""Disk embeddings: trees against a marked circle, then whole graphs.

A tree is *disk-planar* for a marked vertex subset (containing all its
leaves) and a cyclic order on that subset when it embeds in the closed
disk with exactly the marked vertices on the boundary circle, appearing
in the prescribed circular sequence.  The whole graph embeds when every
complement tree is disk-planar for the boundary-induced order on its
attachments and distinct trees occupy nested, non-interleaving portions
of the boundary.

`build_embedding` produces a rotation system realizing such an embedding
and certifies itself by tracing faces: the Euler relation must hold and
the boundary cycle must bound a face.
"""
from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass, field, replace
from math import factorial

from .errors import (
    BudgetExceeded,
    InvariantViolation,
    NotInCarrier,
    NotInTree,
    NotPlanar,
    TerminalNotInVstar,
)
from .graph import DEFAULT_BUDGET
from .orders import CyclicOrder

SAMPLES_PER_BOUNDARY_EDGE = 16


def _adjacency(edges):
    adj = {}
    for e in edges:
        adj.setdefault(e.a, []).append(e)
        adj.setdefault(e.b, []).append(e)
    return {v: sorted(es) for v, es in adj.items()}


def _tree_path_edges(adj, start, goal):
    """Edge sequence of the unique path between two tree vertices."""
    if start == goal:
        return []
    stack = [(start, None, None)]
    parent = {start: (None, None)}
    while stack:
        v, _, _ = stack.pop()
        if v == goal:
            break
        for e in adj[v]:
            w = e.other(v)
            if w not in parent:
                parent[w] = (v, e)
                stack.append((w, v, e))
    if goal not in parent:
        raise NotInTree(goal)
    path = []
    v = goal
    while v != start:
        v, e = parent[v]
        path.append(e)
    path.reverse()
    return path


def _validate_tree_input(edges, boundary):
    adj = _adjacency(edges)
    vertices = set(adj)
    for v in boundary:
        if v not in vertices:
            raise NotInTree(v)
    for v, es in adj.items():
        if len(es) == 1 and v not in boundary:
            raise TerminalNotInVstar(v)
    return adj


def tree_is_disk_planar(edges, boundary, co=None):
    """Path-count criterion with per-edge diagnostics.

    Each pair of circularly adjacent boundary vertices contributes its
    unique tree path; the tree embeds iff every edge lies on exactly two
    such paths.  Two boundary vertices embed unconditionally.
    """
    edges = list(edges)
    boundary = set(boundary)
    adj = _validate_tree_input(edges, boundary)
    counts = {e: 0 for e in edges}
    if len(boundary) >= 3:
        if co is None:
            raise InvariantViolation(
                "a cyclic order is required for three or more boundary vertices"
            )
        if set(co.items) != boundary:
            raise NotInCarrier(sorted(set(co.items) ^ boundary)[0], "cyclic order")
        pairs = co.adjacent_pairs()
    elif len(boundary) == 2:
        b = sorted(boundary)
        pairs = ((b[0], b[1]),)
    else:
        pairs = ()
    for u, w in pairs:
        for e in _tree_path_edges(adj, u, w):
            counts[e] += 1
    if len(boundary) <= 2:
        return True, counts
    return all(c == 2 for c in counts.values()), counts


def _contains_cyclic_subsequence(walk, target):
    """Does the cyclic sequence `walk` contain `target` in circular order?"""
    n, k = len(walk), len(target)
    if k == 0:
        return True
    doubled = walk + walk
    for i in range(n):
        if walk[i] != target[0]:
            continue
        pos = i
        ok = True
        for item in target[1:]:
            pos += 1
            while pos < i + n and doubled[pos] != item:
                pos += 1
            if pos >= i + n:
                ok = False
                break
        if ok:
            return True
    return False


def _contour_sequence(adj, rotation, start_dart):
    """Tail sequence of the single closed walk around a tree drawing."""
    seq = []
    dart = start_dart
    while True:
        u, e = dart
        seq.append(u)
        v = e.other(u)
        rot = rotation[v]
        i = rot.index(e)
        dart = (v, rot[(i - 1) % len(rot)])
        if dart == start_dart:
            return seq


def brute_force_tree_embedding(edges, boundary, co=None, budget=DEFAULT_BUDGET):
    """Ground-truth check by exhaustive rotation-system search.

    Enumerates every cyclic edge order at every vertex, walks the single
    contour of the tree drawing, and accepts when the contour passes the
    boundary vertices in the requested circular sequence (one visit per
    vertex).  Mirror drawings arise as reversed rotation systems, so the
    requested sequence alone covers both orientations.
    """
    edges = list(edges)
    boundary = set(boundary)
    adj = _validate_tree_input(edges, boundary)
    if len(boundary) >= 3:
        if co is None:
            raise InvariantViolation(
                "a cyclic order is required for three or more boundary vertices"
            )
        if set(co.items) != boundary:
            raise NotInCarrier(sorted(set(co.items) ^ boundary)[0], "cyclic order")
        target = co.items
    else:
        return True
    total = 1
    for es in adj.values():
        total *= factorial(len(es) - 1)
    if total > budget:
        raise BudgetExceeded(budget, "rotation-system search")
    order = sorted(adj)
    choices = []
    for v in order:
        es = adj[v]
        if len(es) <= 2:
            choices.append([tuple(es)])
        else:
            choices.append([(es[0],) + p for p in itertools.permutations(es[1:])])
    e0 = edges[0]
    start = (min(e0.a, e0.b), e0)
    for combo in itertools.product(*choices):
        rotation = dict(zip(order, combo))
        walk = [v for v in _contour_sequence(adj, rotation, start) if v in boundary]
        if _contains_cyclic_subsequence(walk, list(target)):
            return True
    return False


def separation_ok(gamma, attach_sets):
    """Every attach family must sit inside one gap of every other family."""
    pos = {v: i for i, v in enumerate(gamma.vertices)}
    for m, a_set in enumerate(attach_sets):
        pa = sorted(pos[v] for v in a_set)
        if len(pa) <= 1:
            continue
        for n_, b_set in enumerate(attach_sets):
            if n_ == m:
                continue
            gaps = {}
            for b in sorted(b_set):
                gap = bisect_left(pa, pos[b]) % len(pa)
                gaps.setdefault(gap, b)
            if len(gaps) > 1:
                reps = sorted(gaps.values())[:2]
                return False, (m, n_, reps[0], reps[1])
    return True, None


def graph_is_disk_planar(dec):
    """Combined embedding test for a decomposed graph (condition S2)."""
    witnesses = []
    full = CyclicOrder(dec.gamma.vertices)
    for t in dec.trees:
        co = full.restrict(t.attach) if len(t.attach) >= 3 else None
        ok, counts = tree_is_disk_planar(t.edges, t.attach, co)
        if not ok:
            bad = sorted((e for e, c in counts.items() if c != 2), key=repr)
            witnesses.append(
                f"tree {t.index} cannot embed with attachments in boundary order: "
                f"edge {bad[0]} lies on {counts[bad[0]]} adjacent-pair paths (need 2)"
            )
    sep, wit = separation_ok(dec.gamma, [t.attach for t in dec.trees])
    if not sep:
        m, n_, b1, b2 = wit
        witnesses.append(
            f"attachments of tree {n_} fall on both sides of tree {m}'s "
            f"attachments ({b1} vs {b2})"
        )
    from .conditions import ConditionReport

    return ConditionReport("S2", not witnesses, tuple(witnesses))


check_S2 = graph_is_disk_planar


@dataclass(frozen=True)
class Face:
    index: int
    darts: tuple  # ((tail, Edge), ...) in walk order
    is_outer: bool
    runs: tuple  # (("arc"|"path", (dart, ...)), ...) cyclic decomposition

    def arc_count(self):
        return sum(1 for kind, _ in self.runs if kind == "arc")

    def vertices(self):
        return tuple(u for u, _ in self.darts)

    def edges(self):
        return tuple(e for _, e in self.darts)


@dataclass(frozen=True)
class DiskEmbedding:
    decomposition: object
    rotation: dict  # vertex -> tuple of incident edges, counterclockwise
    faces: tuple
    outer_index: int
    dart_face: dict  # (tail, Edge) -> face index
    coords: dict | None = None

    @property
    def outer(self):
        return self.faces[self.outer_index]

    def inner_faces(self):
        return tuple(f for f in self.faces if not f.is_outer)

    def with_coords(self, coords):
        return replace(self, coords=coords)


def trace_faces(rotation, edges):
    """Orbit decomposition of darts under the face-successor map."""
    pos = {v: {e: i for i, e in enumerate(rs)} for v, rs in rotation.items()}
    darts = sorted((u, e) for e in edges for u in (e.a, e.b))
    dart_face = {}
    walks = []
    for d0 in darts:
        if d0 in dart_face:
            continue
        walk = []
        d = d0
        while True:
            if d in dart_face:
                raise InvariantViolation(f"face walk re-enters dart {d}")
            dart_face[d] = len(walks)
            walk.append(d)
            u, e = d
            v = e.other(u)
            rot = rotation[v]
            d = (v, rot[(pos[v][e] - 1) % len(rot)])
            if d == d0:
                break
        walks.append(tuple(walk))
    return walks, dart_face


def _subtree_vertices(tree, root, first_edge):
    """Vertices reachable from `root` through `first_edge`, not via root."""
    out = set()
    stack = [first_edge.other(root)]
    blocked = {root}
    while stack:
        u = stack.pop()
        if u in out:
            continue
        out.add(u)
        for e in tree.incident(u):
            w = e.other(u)
            if w not in out and w not in blocked:
                stack.append(w)
    return out


def _sorted_tree_edges_at(tree, v, lin, cut):
    """Incident tree edges ordered by where their far attachments start.

    `lin` maps each attachment to its index along the boundary circle in
    travel direction; `cut` rebases the circle at the given vertex.  The
    attachments reachable through each edge must form one contiguous
    stretch (a consequence of disk-planarity), and edges are returned
    with those stretches in circle order.
    """
    k = len(lin)
    keyed = []
    for e in sorted(tree.incident(v)):
        reach = _subtree_vertices(tree, v, e)
        block = sorted((lin[x] - cut) % k for x in reach if x in lin)
        if not block:
            raise InvariantViolation(
                f"tree {tree.index}: no attachment beyond edge {e} at {v}"
            )
        if block != list(range(block[0], block[0] + len(block))):
            raise InvariantViolation(
                f"tree {tree.index}: attachments beyond {e} at {v} are "
                f"not consecutive on the boundary"
            )
        keyed.append((block[0], e))
    keyed.sort(key=lambda pair: pair[0])
    return tuple(e for _, e in keyed)


def _sorted_interior_edges(tree, v, lin):
    """Rotation at an interior tree vertex: blocks in circular order."""
    k = len(lin)
    keyed = []
    for e in sorted(tree.incident(v)):
        reach = _subtree_vertices(tree, v, e)
        block = {lin[x] for x in reach if x in lin}
        if not block:
            raise InvariantViolation(
                f"tree {tree.index}: no attachment beyond edge {e} at {v}"
            )
        starts = [s for s in block if (s - 1) % k not in block]
        if len(starts) != 1:
            if len(block) == k:
                starts = [min(block)]
            else:
                raise InvariantViolation(
                    f"tree {tree.index}: attachments beyond {e} at {v} are "
                    f"not consecutive on the boundary"
                )
        keyed.append((starts[0], e))
    keyed.sort(key=lambda pair: pair[0])
    return tuple(e for _, e in keyed)


def _face_runs(darts, gamma_edge_set, two_vertex_gamma):
    """Split a face walk into maximal boundary arcs and tree-path runs."""
    kinds = ["arc" if e in gamma_edge_set else "path" for _, e in darts]
    m = len(darts)
    if all(k == "arc" for k in kinds):
        if two_vertex_gamma:
            # the two parallel boundary edges count as two arcs meeting
            # at antipodal points
            return tuple(("arc", (d,)) for d in darts)
        return (("arc", tuple(darts)),)
    if all(k == "path" for k in kinds):
        raise InvariantViolation("face without any boundary edge")
    # rotate so the walk starts at a run boundary
    start = next(i for i in range(m) if kinds[i] != kinds[i - 1])
    darts = darts[start:] + darts[:start]
    kinds = kinds[start:] + kinds[:start]
    runs = []
    i = 0
    while i < m:
        j = i
        while j < m and kinds[j] == kinds[i]:
            j += 1
        runs.append((kinds[i], tuple(darts[i:j])))
        i = j
    return tuple(runs)


def build_embedding(dec):
    """Rotation system with the boundary cycle bounding the outer face.

    Boundary vertices interleave their tree edges between the two cycle
    edges, ordered by where the attachments beyond each edge land on the
    circle; interior tree vertices order edges by the circular stretch
    of attachments behind them.  The result is certified by face
    tracing: Euler relation, a face exactly matching the reversed
    boundary cycle, and every face touching the boundary.
    """
    g, gamma = dec.graph, dec.gamma
    n = len(gamma.vertices)
    full = CyclicOrder(gamma.vertices)
    gamma_pos = {v: i for i, v in enumerate(gamma.vertices)}
    attach_lin = {}
    for t in dec.trees:
        if len(t.attach) >= 3:
            items = full.restrict(t.attach).items
        else:
            items = tuple(sorted(t.attach, key=lambda v: gamma_pos[v]))
        attach_lin[t.index] = {x: i for i, x in enumerate(items)}
    rotation = {}
    for i, v in enumerate(gamma.vertices):
        e_next, e_prev = gamma.edges[i], gamma.edges[i - 1]
        t = dec.tree_of(v)
        if t is None:
            rotation[v] = (e_next, e_prev)
        else:
            lin = attach_lin[t.index]
            tree_edges = _sorted_tree_edges_at(t, v, lin, lin[v])
            rotation[v] = (e_next, *tree_edges, e_prev)
    for t in dec.trees:
        lin = attach_lin[t.index]
        for v in sorted(t.vertices - t.attach):
            rotation[v] = _sorted_interior_edges(t, v, lin)
    walks, dart_face = trace_faces(rotation, g.edges)
    n_faces = len(walks)
    if len(g.vertices) - len(g.edges) + n_faces != 2:
        raise NotPlanar(
            f"Euler relation fails: V={len(g.vertices)} E={len(g.edges)} "
            f"F={n_faces}"
        )
    outer_darts = frozenset(
        (gamma.vertices[(i + 1) % n], gamma.edges[i]) for i in range(n)
    )
    outer_index = None
    for idx, walk in enumerate(walks):
        if frozenset(walk) == outer_darts:
            outer_index = idx
            break
    if outer_index is None:
        raise NotPlanar("the boundary cycle does not bound a face")
    gamma_edges = gamma.edge_set()
    faces = []
    for idx, walk in enumerate(walks):
        if idx == outer_index:
            runs = (("arc", walk),)
        else:
            runs = _face_runs(walk, gamma_edges, n == 2)
        faces.append(Face(idx, walk, idx == outer_index, runs))
    return DiskEmbedding(dec, rotation, tuple(faces), outer_index, dart_face)


def face_arcs(emb):
    """Number of maximal boundary arcs on each inner face, in face order."""
    return [f.arc_count() for f in emb.faces if not f.is_outer]
