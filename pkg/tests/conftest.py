"""
Shared fixtures: the small reference spaces used throughout the tests.

    e5             five collinear points 0, 0.25, ..., 1.0
    interleaved17  two interleaved classes k/8 and k/8 + 1/16 on [0, 1]
    grid64         uniform 64-point grid on [0, 1]
    grid201        uniform 201-point grid on [0, 1] (spacing 1/200)
"""

import os

os.environ.setdefault("LOG_ENV", "test")

import pytest

from src.config import Config
from src.lattice.search import SearchConfig
from src.logging_config import setup_logging
from src.metric.space import space_from_coords, uniform_grid

# Configure test logging
setup_logging('test')


@pytest.fixture
def e5():
    return space_from_coords([[0.0], [0.25], [0.5], [0.75], [1.0]])


@pytest.fixture
def interleaved17():
    """Even ids are the class k/8, odd ids the class k/8 + 1/16."""
    return space_from_coords([[j / 16] for j in range(17)])


@pytest.fixture
def first_class():
    return frozenset(range(0, 17, 2))


@pytest.fixture
def grid64():
    return uniform_grid(64)


@pytest.fixture
def grid201():
    return uniform_grid(201)


@pytest.fixture
def cheap_search():
    return SearchConfig(restarts=2, max_moves=64, rng_seed=3)


@pytest.fixture
def fresh_config(monkeypatch):
    """Config re-read from the environment; undone after the test."""
    Config.reset()
    yield monkeypatch
    Config.reset()
