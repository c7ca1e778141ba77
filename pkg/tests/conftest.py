import pytest

from sstlab import Config


@pytest.fixture
def square() -> Config:
    return Config.from_points([(0, 0), (6, 0), (6, 6), (0, 6)])


@pytest.fixture
def square_plus_interior() -> Config:
    return Config.from_points([(0, 0), (6, 0), (6, 6), (0, 6), (4, 1)])


@pytest.fixture
def triangle() -> Config:
    return Config.from_points([(0, 0), (2, 0), (1, 2)])


@pytest.fixture
def pentagon() -> Config:
    return Config.from_points([(0, 0), (4, 0), (5, 4), (2, 6), (-1, 4)])


@pytest.fixture
def triangle_plus_interior() -> Config:
    return Config.from_points([(0, 0), (6, 0), (3, 5), (3, 2)])
