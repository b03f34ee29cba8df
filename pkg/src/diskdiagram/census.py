"""Exhaustive small-instance sweeps cross-checking the decision code.

Trees mode compares the path-count embedding criterion against the
brute-force rotation-system oracle over every tree up to a size bound,
every admissible boundary subset, and every cyclic order.  Graphs mode
enumerates small partially ordered multigraphs and tabulates how many
fall at each condition of the acceptance pipeline.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

import networkx as nx

from .conditions import is_delta_graph
from .errors import BudgetExceeded
from .graph import DEFAULT_BUDGET, build_graph, make_edges
from .orders import CyclicOrder
from .planarity import brute_force_tree_embedding, tree_is_disk_planar


@dataclass(frozen=True)
class TreesCensusRow:
    size: int
    trees: int
    instances: int
    agreements: int
    disagreements: tuple  # mismatching (edges, boundary, co) triples


def _all_trees(size):
    """All trees on `size` labeled-as-strings vertices, up to isomorphism."""
    if size == 1:
        return []
    if size == 2:
        g = nx.Graph()
        g.add_edge(0, 1)
        return [g]
    return list(nx.nonisomorphic_trees(size))


def _cyclic_orders(items):
    items = sorted(items)
    if len(items) <= 2:
        return [CyclicOrder(items)]
    first, rest = items[0], tuple(items[1:])
    return [CyclicOrder((first,) + p) for p in permutations(rest)]


def trees_census(max_vertices, budget=DEFAULT_BUDGET, collect_limit=5):
    """Criterion-vs-oracle agreement for all trees up to `max_vertices`."""
    if not 2 <= max_vertices <= 8:
        raise BudgetExceeded(max_vertices, "trees census size must be 2..8")
    rows = []
    for size in range(2, max_vertices + 1):
        trees = _all_trees(size)
        instances = agreements = 0
        bad = []
        for t in trees:
            names = {v: f"v{v}" for v in t.nodes}
            edges = make_edges((names[a], names[b]) for a, b in sorted(t.edges))
            leaves = [names[v] for v in t.nodes if t.degree(v) == 1]
            internal = sorted(set(names.values()) - set(leaves))
            for extra in range(len(internal) + 1):
                for add in combinations(internal, extra):
                    boundary = sorted(set(leaves) | set(add))
                    for co in _cyclic_orders(boundary):
                        verdict, _ = tree_is_disk_planar(edges, boundary, co)
                        truth = brute_force_tree_embedding(
                            edges, boundary, co, budget=budget
                        )
                        instances += 1
                        if verdict == truth:
                            agreements += 1
                        elif len(bad) < collect_limit:
                            bad.append((tuple(edges), tuple(boundary), co))
        rows.append(
            TreesCensusRow(size, len(trees), instances, agreements, tuple(bad))
        )
    return rows


def format_trees_census(rows):
    lines = ["size  trees  instances  agree  disagree"]
    total = ok = 0
    for r in rows:
        lines.append(
            f"{r.size:4d}  {r.trees:5d}  {r.instances:9d}  "
            f"{r.agreements:5d}  {r.instances - r.agreements:8d}"
        )
        total += r.instances
        ok += r.agreements
    pct = 100.0 * ok / total if total else 100.0
    lines.append(f"agreement {ok}/{total} = {pct:.1f}%")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# graphs mode


def _posets(names):
    """Every strict partial order on the given labeled elements."""
    pairs = [(a, b) for a in names for b in names if a != b]
    out = []
    for bits in product((False, True), repeat=len(pairs)):
        rel = {p for p, keep in zip(pairs, bits) if keep}
        if any((b, a) in rel for a, b in rel):
            continue
        transitive = True
        for a, b in rel:
            for c, d in rel:
                if b == c and (a, d) not in rel:
                    transitive = False
                    break
            if not transitive:
                break
        if transitive:
            out.append(tuple(sorted(rel)))
    return out


def _multigraphs(names, max_multiplicity=2):
    """Connected min-degree-2 multigraphs as edge-pair tuples."""
    slots = list(combinations(names, 2))
    out = []
    for mults in product(range(max_multiplicity + 1), repeat=len(slots)):
        edges = []
        for (a, b), m in zip(slots, mults):
            edges.extend([(a, b)] * m)
        if len(edges) < len(names):
            continue
        deg = {v: 0 for v in names}
        adj = {v: set() for v in names}
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
            adj[a].add(b)
            adj[b].add(a)
        if any(d < 2 for d in deg.values()):
            continue
        seen = {names[0]}
        stack = [names[0]]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(names):
            continue
        out.append(tuple(edges))
    return out


@dataclass(frozen=True)
class GraphsCensusResult:
    sizes: tuple
    instances: int
    by_outcome: dict  # "delta" or failing condition -> count
    delta_edge_profiles: tuple  # sorted multiset signatures of accepted graphs


def graphs_census(max_vertices, budget=DEFAULT_BUDGET):
    """Verdict tabulation over all small partially ordered multigraphs."""
    if not 2 <= max_vertices <= 4:
        raise BudgetExceeded(
            max_vertices, "graphs census is exhaustive only up to 4 vertices"
        )
    by_outcome = {}
    profiles = set()
    instances = 0
    sizes = tuple(range(2, max_vertices + 1))
    for size in sizes:
        names = [f"v{i}" for i in range(size)]
        posets = _posets(names)
        for edges in _multigraphs(names):
            for rel in posets:
                instances += 1
                g = build_graph(names, edges, rel)
                verdict = is_delta_graph(g, budget=budget)
                key = "delta" if verdict.delta else verdict.failed_condition()
                by_outcome[key] = by_outcome.get(key, 0) + 1
                if verdict.delta:
                    degs = tuple(sorted(g.degree(v) for v in names))
                    profiles.add((size, len(edges), degs))
    return GraphsCensusResult(
        sizes, instances, by_outcome, tuple(sorted(profiles))
    )


def format_graphs_census(res):
    lines = [f"sizes {list(res.sizes)}  instances {res.instances}"]
    for key in sorted(res.by_outcome):
        lines.append(f"  {key:12s} {res.by_outcome[key]}")
    lines.append("accepted degree profiles (size, edges, degrees):")
    for size, m, degs in res.delta_edge_profiles:
        lines.append(f"  n={size} m={m} degrees={list(degs)}")
    return "\n".join(lines)
