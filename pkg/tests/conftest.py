import pytest

from quivernc import parse_quiver


@pytest.fixture(scope="session")
def a1():
    return parse_quiver("vertices 1")


@pytest.fixture(scope="session")
def a2():
    return parse_quiver("vertices 2\narrow 2 1")


@pytest.fixture(scope="session")
def a3():
    # the worked three-vertex example: 1 <- 2 -> 3
    return parse_quiver("vertices 3\narrow 2 1\narrow 2 3")


@pytest.fixture(scope="session")
def a3_linear():
    return parse_quiver("vertices 3\narrow 1 2\narrow 2 3")


@pytest.fixture(scope="session")
def a4():
    return parse_quiver("vertices 4\narrow 1 2\narrow 2 3\narrow 3 4")


@pytest.fixture(scope="session")
def d4():
    return parse_quiver("vertices 4\narrow 2 1\narrow 2 3\narrow 2 4")
