from diskdiagram.families import (
    EXT,
    build_instance,
    chord,
    content_pool,
    corpus_specs,
    dstar6,
    star4,
)
from diskdiagram.orders import check_A4


class TestCorpusShape:
    def test_at_least_two_hundred_specs(self):
        specs = corpus_specs()
        assert len(specs) >= 200

    def test_names_unique(self):
        specs = corpus_specs()
        assert len({s.name for s in specs}) == len(specs)

    def test_pool_items_distinct(self):
        pool = content_pool()
        assert len(set(pool)) == len(pool) == 8

    def test_instance_count(self, corpus):
        assert len(corpus) == 2 * len(corpus_specs())
        modes = {mode for _, mode, _ in corpus}
        assert modes == {"minimal", "saturated"}


class TestInstances:
    def test_every_instance_validates(self, corpus):
        for spec, mode, g in corpus:
            assert len(g.vertices) >= 2, spec.name
            assert all(g.degree(v) >= 2 for v in g.vertices), spec.name

    def test_builds_are_deterministic(self):
        spec = corpus_specs()[17]
        a = build_instance(spec, "minimal")
        b = build_instance(spec, "minimal")
        assert sorted(a.vertices) == sorted(b.vertices)
        assert a.edges == b.edges
        assert a.order.pairs == b.order.pairs

    def test_saturated_extends_minimal(self):
        for spec in corpus_specs()[:20]:
            minimal = build_instance(spec, "minimal")
            saturated = build_instance(spec, "saturated")
            assert saturated.order.extends(minimal.order), spec.name

    def test_saturated_always_congruent(self, corpus):
        for spec, mode, g in corpus:
            if mode == "saturated":
                assert check_A4(g.order).passed, spec.name

    def test_congruence_split_large_enough(self, corpus):
        tallies = {True: 0, False: 0}
        for spec, mode, g in corpus:
            tallies[check_A4(g.order).passed] += 1
        assert tallies[True] >= 100
        assert tallies[False] >= 100

    def test_nested_pockets_present(self):
        deep = chord(chord(chord(EXT)))
        assert deep[1] == 2
        wide = star4(chord(EXT), EXT, EXT)
        assert wide[1] == 4
        double = dstar6(*([EXT] * 5))
        assert double[1] == 6
