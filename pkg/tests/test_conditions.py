import pytest

from diskdiagram.conditions import (
    boundary_pairs,
    check_A1,
    check_A2,
    check_A3,
    check_S3,
    find_cr_cycles,
    is_delta_graph,
)
from diskdiagram.fixtures import EXPECTED, build
from diskdiagram.graph import Cycle, build_graph, decompose

CONDITION_SEQUENCE = ("A1", "A2", "S2", "S3", "A3")


def ring_cycle(g, names):
    edges = []
    for i, u in enumerate(names):
        v = names[(i + 1) % len(names)]
        edges.append(next(e for e in g.edges if e.touches(u) and e.other(u) == v))
    return Cycle(tuple(names), tuple(edges))


class TestVerdicts:
    def test_fixture_outcomes(self, graphs, verdicts):
        for name, (want_delta, want_fail) in EXPECTED.items():
            v = verdicts[name]
            assert bool(v) is want_delta, name
            assert v.failed_condition() == want_fail, name

    def test_reports_run_in_sequence_and_stop(self, verdicts):
        for name, v in verdicts.items():
            names = tuple(r.condition for r in v.reports)
            assert names == CONDITION_SEQUENCE[: len(names)], name
            for r in v.reports[:-1]:
                assert r.passed, name
            if not v.delta:
                assert not v.reports[-1].passed, name

    def test_witnesses_exactly_on_failure(self, verdicts):
        for name, v in verdicts.items():
            for r in v.reports:
                assert bool(r.witnesses) == (not r.passed), (name, r.condition)

    def test_delta_verdict_carries_decomposition(self, verdicts):
        for name, v in verdicts.items():
            if v.delta:
                assert v.gamma is not None
                assert v.decomposition is not None


class TestA1:
    def test_g1_unique_cr_cycle(self):
        g = build("G1")
        crs = find_cr_cycles(g)
        assert len(crs) == 1
        assert set(crs[0].vertices) == {"m", "a", "M", "b"}

    def test_g3_unique_cr_cycle(self):
        g = build("G3")
        crs = find_cr_cycles(g)
        assert len(crs) == 1
        assert set(crs[0].vertices) == {"w1", "M1", "w2", "m1", "w3", "M2", "w4", "m2"}

    def test_missing_pair_leaves_no_cr_cycle(self):
        g = build("g1_missing")
        assert find_cr_cycles(g) == []
        report, gamma = check_A1(g)
        assert not report.passed
        assert gamma is None
        assert "no cycle" in report.witnesses[0]

    def test_multiple_cr_cycles_listed(self):
        g = build_graph(
            ["a", "b", "c"],
            [("a", "b"), ("b", "c"), ("c", "a"), ("a", "b")],
            [("a", "b"), ("b", "c")],
        )
        report, gamma = check_A1(g)
        assert not report.passed
        assert gamma is None
        assert "qualifying cycles" in report.witnesses[0]
        assert len(report.witnesses) > 1

    def test_cyclic_complement_reported_as_a2(self):
        names = [f"v{i}" for i in range(1, 7)]
        ring = [(names[i], names[(i + 1) % 6]) for i in range(6)]
        chords = [("v1", "v3"), ("v3", "v5"), ("v5", "v1")]
        order = [("v1", "v2"), ("v3", "v2"), ("v3", "v4"), ("v5", "v4"), ("v5", "v6"), ("v1", "v6")]
        g = build_graph(names, ring + chords, order)
        v = is_delta_graph(g)
        assert not v.delta
        assert v.failed_condition() == "A2"
        assert "not a tree" in v.reports[-1].witnesses[0]


class TestA2:
    def _g3_dec(self, drop_edge=None):
        from diskdiagram.fixtures import raw

        vs, es, order = raw("G3")
        if drop_edge:
            es = [e for e in es if e != drop_edge]
        g = build_graph(vs, es, order)
        _, gamma = check_A1(g)
        return decompose(g, gamma)

    def test_g3_passes(self):
        report = check_A2(self._g3_dec())
        assert report.passed
        assert report.witnesses == ()

    def test_odd_interior_degree_rejected(self):
        report = check_A2(self._g3_dec(drop_edge=("c", "w4")))
        assert not report.passed
        assert any("c" in w and "3" in w for w in report.witnesses)

    def test_uneven_comparison_rejected(self):
        g = build_graph(
            ["m", "a", "b", "M"],
            [("m", "a"), ("m", "b"), ("a", "M"), ("b", "M"), ("a", "b")],
            [("m", "a"), ("a", "M"), ("b", "M")],
        )
        report = check_A2(decompose(g, ring_cycle(g, ["m", "a", "M", "b"])))
        assert not report.passed
        assert any("unevenly" in w for w in report.witnesses)

    def test_comparable_tree_vertices_rejected(self):
        g = build_graph(
            ["m", "a", "b", "M"],
            [("m", "a"), ("m", "b"), ("a", "M"), ("b", "M"), ("a", "b")],
            [("m", "a"), ("m", "b"), ("a", "M"), ("b", "M"), ("a", "b")],
        )
        report = check_A2(decompose(g, ring_cycle(g, ["m", "a", "M", "b"])))
        assert not report.passed
        assert any("comparable" in w for w in report.witnesses)

    def test_vacuous_without_trees(self):
        g = build_graph(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
            [("a", "b"), ("b", "c"), ("c", "d")],
        )
        _, gamma = check_A1(g)
        report = check_A2(decompose(g, gamma))
        assert report.passed


class TestA3:
    def test_odd_degree_needs_monotone_passage(self):
        g = build_graph(
            ["m", "a", "b", "M"],
            [("m", "a"), ("m", "b"), ("a", "M"), ("b", "M"), ("a", "b")],
            [("m", "a"), ("m", "b"), ("M", "a"), ("M", "b")],
        )
        v = is_delta_graph(g)
        assert not v.delta
        assert v.failed_condition() == "A3"
        assert any("monotonically" in w for w in v.reports[-1].witnesses)

    def test_degree_two_needs_branching_neighbors(self):
        g = build_graph(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
            [("a", "b"), ("b", "c"), ("c", "d")],
        )
        v = is_delta_graph(g)
        assert not v.delta
        assert v.failed_condition() == "A3"
        assert any("degree-2" in w for w in v.reports[-1].witnesses)

    def test_even_degree_extremal_passes(self, verdicts):
        assert verdicts["even_attach"].delta

    def test_g1_vacuous_tables(self, verdicts):
        report = verdicts["G1"].reports[-1]
        assert report.condition == "A3"
        assert report.passed

    def test_split_tree_neighbors_rejected(self):
        g = build("G4")
        _, gamma = check_A1(g)
        dec = decompose(g, gamma)
        bad_order = [
            ("m", "a1"), ("m", "b1"), ("a1", "a2"), ("a1", "b2"),
            ("b1", "a2"), ("b1", "b2"), ("M", "a2"), ("M", "b2"),
        ]
        from diskdiagram.orders import StrictPartialOrder

        order = StrictPartialOrder.from_pairs(g.vertices, bad_order)
        report = check_A3(dec, order=order)
        assert not report.passed


class TestBoundaryPairs:
    def _g4_dec(self):
        g = build("G4")
        _, gamma = check_A1(g)
        return decompose(g, gamma)

    def test_outer_chord_sees_inner(self):
        dec = self._g4_dec()
        outer = next(t for t in dec.trees if t.vertices == frozenset({"a1", "b1"}))
        bps = boundary_pairs(dec, outer.index)
        assert len(bps) == 1
        bp = bps[0]
        assert bp.pair == ("a1", "b1")
        assert bp.alpha == ("a2", "M", "b2")
        assert bp.tilde == ("a2", "b2")

    def test_inner_chord_sees_outer(self):
        dec = self._g4_dec()
        inner = next(t for t in dec.trees if t.vertices == frozenset({"a2", "b2"}))
        bps = boundary_pairs(dec, inner.index)
        assert len(bps) == 1
        bp = bps[0]
        assert bp.pair == ("a2", "b2")
        assert bp.alpha == ("a1", "m", "b1")
        assert bp.tilde == ("a1", "b1")

    def test_single_tree_has_none(self):
        g = build("G1")
        _, gamma = check_A1(g)
        dec = decompose(g, gamma)
        assert boundary_pairs(dec, 0) == []

    def test_alpha_avoids_own_attachments(self, verdicts):
        for name in ("G4", "hybrid"):
            dec = verdicts[name].decomposition
            for t in dec.trees:
                for bp in boundary_pairs(dec, t.index):
                    assert not (set(bp.alpha) & t.attach)
                    assert set(bp.tilde) <= set(bp.alpha)


class TestS3:
    def test_g4_passes(self):
        g = build("G4")
        _, gamma = check_A1(g)
        report = check_S3(decompose(g, gamma))
        assert report.passed

    def test_three_chord_names_both_trees(self, verdicts):
        v = verdicts["three_chord"]
        assert v.failed_condition() == "S3"
        assert any("different trees" in w for w in v.reports[-1].witnesses)

    def test_vacuous_on_single_tree(self):
        g = build("G1")
        _, gamma = check_A1(g)
        report = check_S3(decompose(g, gamma))
        assert report.passed
        assert report.witnesses == ()
