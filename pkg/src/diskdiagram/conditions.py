"""Structural conditions deciding realizability on the disk.

The battery runs in a fixed sequence and stops at the first failure:

  A1  exactly one simple cycle whose consecutive vertices are comparable
  A2  the rest of the graph is a forest of uniformly compared trees whose
      interior vertices have even degree at least four
  S2  every tree embeds against the boundary circle and distinct trees
      occupy non-interleaving boundary arcs
  S3  each boundary pair faces attachments of one single other tree
  A3  boundary vertices are passed monotonically or extremally according
      to their degree parity

A graph passing all five is realizable ("delta" verdict); the pipeline
then also re-checks the consequence that order-minimal and order-maximal
vertices sit on the boundary cycle with degree two.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation, NotAForest
from .graph import DEFAULT_BUDGET, decompose, simple_cycles


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    passed: bool
    witnesses: tuple = ()

    def __bool__(self):
        return self.passed


def find_cr_cycles(g, budget=DEFAULT_BUDGET):
    """Simple cycles in which every pair of cycle-adjacent vertices is comparable."""
    out = []
    for c in simple_cycles(g, budget=budget):
        n = len(c.vertices)
        ok = True
        for i in range(n if n > 2 else 1):
            u, v = c.vertices[i], c.vertices[(i + 1) % n]
            if not g.order.comparable(u, v):
                ok = False
                break
        if ok:
            out.append(c)
    return out


def check_A1(g, budget=DEFAULT_BUDGET):
    crs = find_cr_cycles(g, budget=budget)
    if len(crs) == 1:
        return ConditionReport("A1", True), crs[0]
    if not crs:
        return ConditionReport("A1", False, ("no cycle with all adjacent pairs comparable",)), None
    wits = tuple(f"cycle {'-'.join(c.vertices)}" for c in crs[:4])
    return ConditionReport("A1", False, (f"{len(crs)} qualifying cycles",) + wits), None


def check_A2(dec, order=None):
    """Forest shape, uniform comparison, and interior degree parity."""
    if order is None:
        order = dec.graph.order
    g = dec.graph
    wits = []
    for t in dec.trees:
        for v in sorted(g.vertices):
            rest = t.vertices - {v}
            if not rest:
                continue
            below = {w for w in rest if order.lt(w, v)}
            above = {w for w in rest if order.lt(v, w)}
            if below and below != rest:
                wits.append(
                    f"tree {t.index} compares unevenly with {v}: "
                    f"{sorted(below)[0]} < {v} but {sorted(rest - below)[0]} is not"
                )
            if above and above != rest:
                wits.append(
                    f"tree {t.index} compares unevenly with {v}: "
                    f"{v} < {sorted(above)[0]} but not {v} < {sorted(rest - above)[0]}"
                )
        tv = sorted(t.vertices)
        for i, a in enumerate(tv):
            for b in tv[i + 1 :]:
                if order.comparable(a, b):
                    wits.append(f"tree {t.index} vertices {a}, {b} are comparable")
    for v in sorted(dec.interior_vertices()):
        d = g.degree(v)
        if d < 4 or d % 2:
            wits.append(f"interior vertex {v} has degree {d}; need even degree >= 4")
    return ConditionReport("A2", not wits, tuple(wits))


def check_A3(dec, order=None):
    """Per-vertex passage rules along the boundary cycle."""
    if order is None:
        order = dec.graph.order
    g = dec.graph
    gamma = dec.gamma
    wits = []
    for v in gamma.vertices:
        p, n = gamma.neighbors_of(v)
        if p == n:
            # the two-vertex boundary cycle: no distinct neighbor pair to test
            continue
        d = g.degree(v)
        if d == 2:
            if g.degree(p) <= 2 or g.degree(n) <= 2:
                wits.append(f"degree-2 vertex {v} has a degree-2 neighbor")
                continue
            tp, tn = dec.tree_of(p), dec.tree_of(n)
            if tp is None or tn is None or tp.index != tn.index:
                wits.append(f"neighbors {p}, {n} of degree-2 vertex {v} are not in one tree")
        elif d % 2 == 0:
            below = order.lt(p, v) and order.lt(n, v)
            above = order.lt(v, p) and order.lt(v, n)
            if not (below or above):
                wits.append(
                    f"even-degree vertex {v} is not extremal among its cycle neighbors {p}, {n}"
                )
        else:
            up = order.lt(p, v) and order.lt(v, n)
            down = order.lt(n, v) and order.lt(v, p)
            if not (up or down):
                wits.append(
                    f"odd-degree vertex {v} is not passed monotonically between {p} and {n}"
                )
    return ConditionReport("A3", not wits, tuple(wits))


@dataclass(frozen=True)
class BoundaryPair:
    tree_index: int
    pair: tuple  # (v1, v2) attachments of the tree
    alpha: tuple  # vertices of the open arc, in cycle direction
    tilde: tuple  # cycle-neighbors of v1 and v2 inside alpha


def boundary_pairs(dec, tree_index):
    """Attachment pairs of one tree that face foreign attachments.

    A pair (v1, v2) of the tree's attachments qualifies when some open arc
    of the boundary cycle between them contains no attachment of the same
    tree but at least one attachment of another tree.  The qualifying arc
    and the neighbors of v1, v2 inside it are returned with the pair; in
    the degenerate situation where both arcs qualify, one entry per arc is
    produced.
    """
    tree = dec.trees[tree_index]
    vstar = tree.attach
    all_attach = dec.attach_all()
    gamma = dec.gamma
    n = len(gamma.vertices)
    out = []
    order_on_gamma = {v: i for i, v in enumerate(gamma.vertices)}
    pairs_done = set()
    vs = sorted(vstar)
    for i, v1 in enumerate(vs):
        for v2 in vs[i + 1 :]:
            i1, i2 = order_on_gamma[v1], order_on_gamma[v2]
            for a, b in ((i1, i2), (i2, i1)):
                arc = [gamma.vertices[(a + k) % n] for k in range(1, (b - a) % n)]
                if any(x in vstar for x in arc):
                    continue
                if not any(x in all_attach for x in arc):
                    continue
                va, vb = gamma.vertices[a], gamma.vertices[b]
                tilde = {va: arc[0], vb: arc[-1]}
                key = (min(va, vb), max(va, vb), tuple(arc) if va < vb else tuple(reversed(arc)))
                if key in pairs_done:
                    continue
                pairs_done.add(key)
                out.append(
                    BoundaryPair(
                        tree_index,
                        (v1, v2),
                        tuple(arc) if va == v1 else tuple(reversed(arc)),
                        (tilde[v1], tilde[v2]),
                    )
                )
    out.sort(key=lambda bp: (bp.pair, bp.alpha))
    return out


def check_S3(dec):
    """Both inner neighbors of every boundary pair attach one common other tree."""
    wits = []
    for t in dec.trees:
        for bp in boundary_pairs(dec, t.index):
            t1, t2 = (dec.tree_of(x) for x in bp.tilde)
            if t1 is None or t2 is None:
                missing = [x for x, tr in zip(bp.tilde, (t1, t2)) if tr is None]
                wits.append(
                    f"pair {bp.pair} of tree {t.index}: neighbor {missing[0]} attaches no tree"
                )
            elif t1.index != t2.index:
                wits.append(
                    f"pair {bp.pair} of tree {t.index}: neighbors {bp.tilde} attach "
                    f"different trees {t1.index} and {t2.index}"
                )
            elif t1.index == t.index:
                wits.append(
                    f"pair {bp.pair} of tree {t.index}: neighbors {bp.tilde} attach the same tree"
                )
    return ConditionReport("S3", not wits, tuple(wits))


@dataclass(frozen=True)
class DeltaVerdict:
    delta: bool
    reports: tuple
    gamma: object = None
    decomposition: object = None

    def __bool__(self):
        return self.delta

    def failed_condition(self):
        for r in self.reports:
            if not r.passed:
                return r.condition
        return None


def is_delta_graph(g, budget=DEFAULT_BUDGET):
    """Run the full condition battery; short-circuits at the first failure."""
    from .planarity import check_S2

    reports = []
    a1, gamma = check_A1(g, budget=budget)
    reports.append(a1)
    if not a1:
        return DeltaVerdict(False, tuple(reports))
    try:
        dec = decompose(g, gamma)
    except NotAForest as exc:
        reports.append(
            ConditionReport("A2", False, (f"complement component {exc.component_index} is not a tree",))
        )
        return DeltaVerdict(False, tuple(reports), gamma)
    a2 = check_A2(dec)
    reports.append(a2)
    if not a2:
        return DeltaVerdict(False, tuple(reports), gamma, dec)
    s2 = check_S2(dec)
    reports.append(s2)
    if not s2:
        return DeltaVerdict(False, tuple(reports), gamma, dec)
    s3 = check_S3(dec)
    reports.append(s3)
    if not s3:
        return DeltaVerdict(False, tuple(reports), gamma, dec)
    a3 = check_A3(dec)
    reports.append(a3)
    if not a3:
        return DeltaVerdict(False, tuple(reports), gamma, dec)
    _check_extrema_on_boundary(g, gamma)
    return DeltaVerdict(True, tuple(reports), gamma, dec)


def _check_extrema_on_boundary(g, gamma):
    """Consequence check: order extrema are degree-2 boundary vertices."""
    for v in g.order.minimal_elements() | g.order.maximal_elements():
        if v not in gamma.vertices or g.degree(v) != 2:
            raise InvariantViolation(
                f"order extremum {v} should lie on the boundary cycle with degree 2"
            )
