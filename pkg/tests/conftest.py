import pytest

from steinberg import cuntz_graph
from steinberg.checks import two_vertex_graph


@pytest.fixture(scope="session")
def o2():
    return cuntz_graph(2)


@pytest.fixture(scope="session")
def o3():
    return cuntz_graph(3)


@pytest.fixture(scope="session")
def gv2():
    return two_vertex_graph()
