import pytest

from diskdiagram.conditions import is_delta_graph
from diskdiagram.families import corpus_instances, corpus_specs
from diskdiagram.fixtures import EXPECTED, FIXTURES, build
from diskdiagram.realization import realize


@pytest.fixture(scope="session")
def graphs():
    return {name: build(name) for name in FIXTURES}


@pytest.fixture(scope="session")
def verdicts(graphs):
    return {name: is_delta_graph(g) for name, g in graphs.items()}


@pytest.fixture(scope="session")
def delta_names():
    return [name for name, (ok, _) in EXPECTED.items() if ok]


@pytest.fixture(scope="session")
def realized(graphs, delta_names):
    return {name: realize(graphs[name]) for name in delta_names}


@pytest.fixture(scope="session")
def corpus():
    """All (spec, order_mode, graph) corpus instances."""
    return list(corpus_instances(corpus_specs()))


@pytest.fixture(scope="session")
def realized_corpus(corpus):
    """Corpus realized in default mode: (spec, mode, graph, function)."""
    return [
        (spec, mode, g, realize(g)) for spec, mode, g in corpus
    ]
