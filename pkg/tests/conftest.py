import pytest

from eqschubert import GrassContext, Partition


@pytest.fixture(scope="session")
def gr24():
    return GrassContext(2, 4)


@pytest.fixture(scope="session")
def gr12():
    return GrassContext(1, 2)


@pytest.fixture(scope="session")
def gr25():
    return GrassContext(2, 5)


@pytest.fixture(scope="session")
def gr36():
    return GrassContext(3, 6)


def part(ctx, *parts):
    return Partition(tuple(parts), ctx)
