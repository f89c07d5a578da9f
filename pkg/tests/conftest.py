import random

import pytest

from catalog.families import FamilySpec, construct
from graphs.graph import Graph


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def c5():
    return Graph.cycle(5)


@pytest.fixture
def p10():
    return construct(FamilySpec.special("P10"))


@pytest.fixture
def m11():
    return construct(FamilySpec.special("M11"))


@pytest.fixture
def k33():
    return Graph.complete_bipartite(3, 3)


@pytest.fixture
def k34():
    return Graph.complete_bipartite(3, 4)


@pytest.fixture
def k44():
    return Graph.complete_bipartite(4, 4)
