"""Sweep the generated corpus: realize every instance and check invariants.

For each family spec the graph is built in both order modes (minimal and
saturated), run through the full decision + realization pipeline, and
checked against the structural invariants: inner faces carry one or two
boundary arcs, face counts satisfy the Euler relation, boundary extrema
alternate with even count at exactly the even-degree boundary vertices,
the corner-sign census passes, and the order induced by the heights
extends the input order.  With --strict the strict height mode runs as
well and the equality-vs-congruence tallies are reported.
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from diskdiagram.conditions import is_delta_graph
from diskdiagram.families import build_instance, corpus_specs
from diskdiagram.orders import check_A4
from diskdiagram.planarity import face_arcs
from diskdiagram.realization import induced_order, realize, sign_census


def check_instance(g, f):
    """Return a list of invariant-violation strings (empty when clean)."""
    problems = []
    arcs = face_arcs(f.embedding)
    if any(a not in (1, 2) for a in arcs):
        problems.append(f"bad face arc counts {arcs}")
    if len(g.vertices) - len(g.edges) + len(f.embedding.faces) != 2:
        problems.append("face count breaks the Euler relation")
    dec = f.decomposition
    ext = f.boundary_extrema()
    if len(ext) % 2:
        problems.append(f"odd number of boundary extrema ({len(ext)})")
    even = {v for v in dec.gamma.vertices if g.degree(v) % 2 == 0}
    if {v for v, _ in ext} != even:
        problems.append("extrema not at the even-degree boundary vertices")
    census = sign_census(f)
    if not census.passed:
        problems.append(f"sign census failed: {census.witnesses[:2]}")
    if not induced_order(f.heights).extends(g.order):
        problems.append("induced order does not extend the input order")
    return problems


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=None,
                    help="only the first N family specs")
    ap.add_argument("--strict", action="store_true",
                    help="also run strict height mode and tally congruence")
    ap.add_argument("-v", "--verbose", action="store_true",
                    help="print one line per instance")
    args = ap.parse_args(argv)

    specs = corpus_specs()
    if args.limit is not None:
        specs = specs[: args.limit]
    t0 = time.perf_counter()
    bad = 0
    total = 0
    congruent = 0
    equal_strict = 0
    mismatched = 0
    for spec in specs:
        for mode in ("minimal", "saturated"):
            g = build_instance(spec, mode)
            verdict = is_delta_graph(g)
            if not verdict.delta:
                bad += 1
                print(f"REJECTED {spec.name} [{mode}]: "
                      f"{verdict.failed_condition()}")
                continue
            f = realize(g)
            problems = check_instance(g, f)
            total += 1
            if problems:
                bad += 1
                for p in problems:
                    print(f"BAD {spec.name} [{mode}]: {p}")
            elif args.verbose:
                print(f"ok {spec.name} [{mode}] "
                      f"n={len(g.vertices)} faces={len(f.embedding.faces)}")
            if args.strict:
                a4 = check_A4(g.order).passed
                congruent += a4
                fs = realize(g, mode="strict")
                eq = induced_order(fs.heights).pairs == g.order.pairs
                equal_strict += eq
                if eq != a4:
                    mismatched += 1
                    print(f"MISMATCH {spec.name} [{mode}]: "
                          f"strict equality {eq} but congruence {a4}")
    dt = time.perf_counter() - t0
    print(f"{total} instances realized from {len(specs)} specs "
          f"in {dt:.1f} s; {bad} problem(s)")
    if args.strict:
        print(f"strict mode: {congruent} congruent orders, "
              f"{equal_strict} exact recoveries, {mismatched} mismatch(es)")
    return 1 if bad or mismatched else 0


if __name__ == "__main__":
    sys.exit(main())
