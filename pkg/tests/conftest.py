import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from symbreak.corpus import corpus  # noqa: E402
from symbreak.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph  # noqa: E402


@pytest.fixture(scope="session")
def corpus6():
    return list(corpus(6))


@pytest.fixture(scope="session")
def connected6():
    return list(corpus(6, connected_only=True))


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def claw():
    return star_graph(3)


def asymmetric6() -> Graph:
    # smallest asymmetric graphs have 6 vertices; this is one of them
    return Graph(6, [(0, 2), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)])
