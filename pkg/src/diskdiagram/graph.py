"""Connected multigraphs with a strict partial order on vertices.

Parallel edges are first-class citizens: every edge carries a ``key``
disambiguating copies between the same endpoints, and a pair of parallel
edges counts as a simple cycle of length two.  Self-loops are rejected.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BudgetExceeded,
    DegreeBelowTwo,
    DisconnectedGraph,
    NotAForest,
    NotInTree,
    SelfLoop,
)
from .orders import StrictPartialOrder

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True, order=True)
class Edge:
    """An undirected edge; endpoints are stored sorted."""

    a: str
    b: str
    key: int = 0

    def __post_init__(self):
        if self.a == self.b:
            raise SelfLoop(self.a)
        if self.a > self.b:
            object.__setattr__(self, "a", self.b)
            object.__setattr__(self, "b", self.a)

    def other(self, v):
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise ValueError(f"{v!r} is not an endpoint of {self}")

    def touches(self, v):
        return v == self.a or v == self.b

    def __repr__(self):
        tag = f"#{self.key}" if self.key else ""
        return f"{self.a}-{self.b}{tag}"


def make_edges(pairs):
    """Assign keys to raw endpoint pairs, numbering parallel copies."""
    seen = {}
    out = []
    for u, v in pairs:
        ends = (u, v) if u <= v else (v, u)
        k = seen.get(ends, 0)
        seen[ends] = k + 1
        out.append(Edge(ends[0], ends[1], k))
    return tuple(out)


@dataclass(frozen=True)
class Cycle:
    """A simple cycle: vertices[i] -- edges[i] -- vertices[i+1 mod n]."""

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        n = len(self.vertices)
        if n != len(self.edges) or n < 2:
            raise ValueError("cycle needs matching vertex and edge sequences, length >= 2")
        for i, e in enumerate(self.edges):
            u, v = self.vertices[i], self.vertices[(i + 1) % n]
            if not (e.touches(u) and e.touches(v)):
                raise ValueError(f"edge {e} does not join {u!r} and {v!r}")

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices

    def edge_set(self):
        return frozenset(self.edges)

    def neighbors_of(self, v):
        """(previous, next) vertex along the cycle; equal on a 2-cycle."""
        i = self.vertices.index(v)
        n = len(self.vertices)
        return self.vertices[(i - 1) % n], self.vertices[(i + 1) % n]

    def edges_at(self, v):
        """(incoming, outgoing) edge at v following the stored direction."""
        i = self.vertices.index(v)
        n = len(self.vertices)
        return self.edges[(i - 1) % n], self.edges[i]

    def arcs_without(self, removed):
        """Maximal runs of consecutive vertices avoiding ``removed``.

        Returns a list of vertex lists, each in cycle direction.  Empty runs
        between two consecutive removed vertices are dropped.
        """
        n = len(self.vertices)
        removed = set(removed)
        keep = [v for v in self.vertices if v not in removed]
        if len(keep) == len(self.vertices):
            return [list(self.vertices)]
        # rotate so position 0 is removed, then split linearly
        start = next(i for i, v in enumerate(self.vertices) if v in removed)
        rotated = [self.vertices[(start + i) % n] for i in range(n)]
        arcs, cur = [], []
        for v in rotated:
            if v in removed:
                if cur:
                    arcs.append(cur)
                cur = []
            else:
                cur.append(v)
        if cur:
            arcs.append(cur)
        return arcs

    def canonical(self):
        """Representative tuple invariant under rotation and reflection."""
        n = len(self.vertices)
        m = min(self.vertices)
        best = None
        for seq_v, seq_e in (
            (self.vertices, self.edges),
            (
                tuple(reversed(self.vertices)),
                tuple(self.edges[(n - 2 - i) % n] for i in range(n)),
            ),
        ):
            for r in range(n):
                if seq_v[r] != m:
                    continue
                vs = tuple(seq_v[(r + i) % n] for i in range(n))
                es = tuple(seq_e[(r + i) % n] for i in range(n))
                cand = (vs, tuple((e.a, e.b, e.key) for e in es))
                if best is None or cand < best:
                    best = cand
        return best

    def canonical_form(self):
        """This cycle rewritten to start at its canonical rotation."""
        vs, es = self.canonical()
        return Cycle(vs, tuple(Edge(*t) for t in es))

    def __hash__(self):
        return hash(self.canonical())

    def __eq__(self, other):
        return isinstance(other, Cycle) and self.canonical() == other.canonical()


@dataclass(frozen=True)
class PoGraph:
    """A validated partially ordered multigraph."""

    vertices: frozenset
    edges: tuple
    order: StrictPartialOrder
    _incident: dict = field(compare=False, repr=False, default=None)

    def incident(self, v):
        return self._incident[v]

    def degree(self, v):
        return len(self._incident[v])

    def neighbors(self, v):
        return sorted({e.other(v) for e in self._incident[v]})


def build_graph(vertices, edge_pairs, order_pairs):
    """Validate and assemble a PoGraph.

    Checks, in this sequence: no self-loops, connectivity, minimum degree
    two, and that the order generates no cycle.
    """
    vertices = frozenset(vertices)
    edges = make_edges(edge_pairs)  # raises SelfLoop
    incident = {v: [] for v in sorted(vertices)}
    for e in edges:
        for x in (e.a, e.b):
            if x not in vertices:
                from .errors import UnknownId

                raise UnknownId(x, "edge list")
        incident[e.a].append(e)
        incident[e.b].append(e)
    incident = {v: tuple(sorted(es)) for v, es in incident.items()}
    if vertices:
        comp = _component(incident, min(vertices))
        if comp != vertices:
            raise DisconnectedGraph(comp)
    for v in sorted(vertices):
        if len(incident[v]) < 2:
            raise DegreeBelowTwo(v, len(incident[v]))
    order = StrictPartialOrder.from_pairs(vertices, order_pairs)  # raises OrderCycle
    return PoGraph(vertices, edges, order, incident)


def _component(incident, start):
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for e in incident[v]:
            w = e.other(v)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def enumerate_simple_cycles(vertices, edges, max_len=None, budget=DEFAULT_BUDGET):
    """All simple cycles of a multigraph, one per rotation/reflection class.

    Works on raw vertex and edge collections so acyclic inputs (which
    PoGraph validation would refuse) can still be queried.  A pair of
    parallel edges counts as one cycle of length two.  Raises
    BudgetExceeded after ``budget`` search steps.
    """
    verts = sorted(set(vertices))
    incident = {v: [] for v in verts}
    for e in edges:
        incident[e.a].append(e)
        incident[e.b].append(e)
    for v in incident:
        incident[v].sort()
    cycles = []
    # length-2 cycles: each unordered pair of parallel edges, keys ascending
    by_ends = {}
    for e in edges:
        by_ends.setdefault((e.a, e.b), []).append(e)
    if max_len is None or max_len >= 2:
        for (a, b), group in sorted(by_ends.items()):
            group.sort()
            for i in range(len(group)):
                for j in range(i + 1, len(group)):
                    cycles.append(Cycle((a, b), (group[i], group[j])))
    steps = 0

    def dfs(start, v, path_v, path_e, used_e, on_path):
        nonlocal steps
        for e in incident[v]:
            steps += 1
            if steps > budget:
                raise BudgetExceeded(budget, "cycle enumeration")
            if e in used_e:
                continue
            w = e.other(v)
            if w < start:
                continue
            if w == start:
                if len(path_v) >= 3 and path_v[1] < path_v[-1]:
                    cycles.append(Cycle(tuple(path_v), tuple(path_e) + (e,)))
                continue
            if w in on_path:
                continue
            if max_len is not None and len(path_v) + 1 > max_len:
                continue
            path_v.append(w)
            path_e.append(e)
            used_e.add(e)
            on_path.add(w)
            dfs(start, w, path_v, path_e, used_e, on_path)
            path_v.pop()
            path_e.pop()
            used_e.discard(e)
            on_path.discard(w)

    if max_len is None or max_len >= 3:
        for s in verts:
            dfs(s, s, [s], [], set(), {s})
    # the search already yields one representative per rotation/reflection
    # class: paths start at the smallest cycle vertex, direction fixed by
    # the second-vs-last comparison, and 2-cycles are emitted sorted
    return cycles


def simple_cycles(g, max_len=None, budget=DEFAULT_BUDGET):
    """All simple cycles of ``g`` up to rotation and reflection."""
    return enumerate_simple_cycles(g.vertices, g.edges, max_len, budget)


@dataclass(frozen=True)
class TreeComponent:
    """One component of the closure of the graph minus the boundary cycle."""

    index: int
    vertices: frozenset
    edges: tuple
    attach: frozenset  # vertices shared with the boundary cycle
    terminal: frozenset  # leaves within the component

    def incident(self, v):
        return tuple(e for e in self.edges if e.touches(v))

    def tree_degree(self, v):
        return len(self.incident(v))


@dataclass(frozen=True)
class Decomposition:
    graph: PoGraph
    gamma: Cycle
    trees: tuple

    def interior_vertices(self):
        """Vertices of the graph not on the boundary cycle."""
        return frozenset(self.graph.vertices) - frozenset(self.gamma.vertices)

    def tree_of(self, v):
        """The unique tree containing v, or None."""
        for t in self.trees:
            if v in t.vertices:
                return t
        return None

    def attach_all(self):
        out = set()
        for t in self.trees:
            out |= t.attach
        return frozenset(out)


def decompose(g, gamma):
    """Split ``g`` into the boundary cycle and the forest hanging off it.

    The forest components are the connected components of the union of all
    edges not on ``gamma`` together with their endpoints.  Each component
    must be a tree; otherwise NotAForest is raised.  Components are indexed
    deterministically by their smallest vertex.
    """
    gamma_edges = set(gamma.edges)
    gamma_verts = set(gamma.vertices)
    rest = [e for e in g.edges if e not in gamma_edges]
    adj = {}
    for e in rest:
        adj.setdefault(e.a, []).append(e)
        adj.setdefault(e.b, []).append(e)
    seen = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        verts = {start}
        comp_edges = set()
        stack = [start]
        while stack:
            v = stack.pop()
            for e in adj[v]:
                comp_edges.add(e)
                w = e.other(v)
                if w not in verts:
                    verts.add(w)
                    stack.append(w)
        seen |= verts
        comps.append((sorted(verts)[0], verts, comp_edges))
    comps.sort(key=lambda c: c[0])
    trees = []
    for idx, (_, verts, comp_edges) in enumerate(comps):
        if len(comp_edges) != len(verts) - 1:
            raise NotAForest(idx, sorted(verts))
        attach = frozenset(verts & gamma_verts)
        deg = {v: 0 for v in verts}
        for e in comp_edges:
            deg[e.a] += 1
            deg[e.b] += 1
        terminal = frozenset(v for v, d in deg.items() if d == 1)
        trees.append(
            TreeComponent(idx, frozenset(verts), tuple(sorted(comp_edges)), attach, terminal)
        )
    dec = Decomposition(g, gamma, tuple(trees))
    _validate_decomposition(dec)
    return dec


def _validate_decomposition(dec):
    from .errors import InvariantViolation

    seen_edges = set(dec.gamma.edges)
    for t in dec.trees:
        if not t.terminal <= t.attach:
            # impossible when every graph vertex has degree >= 2
            raise InvariantViolation(
                f"tree {t.index} has a leaf off the boundary: {sorted(t.terminal - t.attach)}"
            )
        overlap = seen_edges & set(t.edges)
        if overlap:
            raise InvariantViolation(f"edge {sorted(overlap)[0]} assigned twice")
        seen_edges |= set(t.edges)
    if len(seen_edges) != len(dec.graph.edges):
        raise InvariantViolation("decomposition does not cover every edge")
    for i, t in enumerate(dec.trees):
        for s in dec.trees[i + 1 :]:
            if t.vertices & s.vertices:
                raise InvariantViolation(
                    f"trees {t.index} and {s.index} share vertices {sorted(t.vertices & s.vertices)}"
                )


def tree_path(tree, u, v):
    """The unique edge sequence joining u and v inside a tree component."""
    for x in (u, v):
        if x not in tree.vertices:
            raise NotInTree(x)
    if u == v:
        return ()
    adj = {}
    for e in tree.edges:
        adj.setdefault(e.a, []).append(e)
        adj.setdefault(e.b, []).append(e)
    prev = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for e in sorted(adj.get(x, ())):
            w = e.other(x)
            if w not in prev:
                prev[w] = (x, e)
                stack.append(w)
    path = []
    node = v
    while prev[node] is not None:
        x, e = prev[node]
        path.append(e)
        node = x
    return tuple(reversed(path))


def path_vertices(tree, u, v):
    """Vertex sequence of the unique tree path from u to v, inclusive."""
    edges = tree_path(tree, u, v)
    seq = [u]
    for e in edges:
        seq.append(e.other(seq[-1]))
    return tuple(seq)
