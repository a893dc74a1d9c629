import pytest

from tower import Tower
from towers import principal_tower, archimedean_tower, plane_irrational_tower, plane_tie_tower


@pytest.fixture
def principal() -> Tower:
    return principal_tower()


@pytest.fixture
def archimedean() -> Tower:
    return archimedean_tower()


@pytest.fixture
def plane_irrational() -> Tower:
    return plane_irrational_tower()


@pytest.fixture
def plane_tie() -> Tower:
    return plane_tie_tower()
