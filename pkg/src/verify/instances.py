"""
Seeded random metric spaces for the verification suite and the oracle tests.

Instance i of a run with seed s is built from SeedSequence(s, spawn_key=(i,)),
negative seeds folded to their unsigned 64-bit value,
so any single instance can be rebuilt from (seed, index) alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ..exceptions import PreconditionError
from ..lattice.models import seed_entropy
from ..metric.models import NAMED_METRICS, MetricSpace
from ..metric.space import diameter, min_positive_distance, repair_metric, space_from_coords, space_from_matrix

KINDS = ("cloud", "matrix")


@dataclass(frozen=True)
class Instance:
    seed: int
    index: int
    kind: str
    space: MetricSpace
    eps: float

    @property
    def reproducer(self) -> str:
        return f"seed={self.seed} instance={self.index} eps={self.eps!r}"


def _random_cloud(rng: np.random.Generator, n: int) -> MetricSpace:
    dim = int(rng.integers(1, 4))
    metric = NAMED_METRICS[int(rng.integers(len(NAMED_METRICS)))]
    # eighths keep 1-D distances exact and produce genuine ties
    coords = rng.integers(0, 9, size=(n, dim)) / 8.0
    return space_from_coords(coords.tolist(), metric)


def _random_matrix(rng: np.random.Generator, n: int) -> MetricSpace:
    weights = rng.integers(1, 7, size=(n, n)).astype(float)
    weights = np.triu(weights, 1)
    return space_from_matrix(repair_metric(weights + weights.T))


def _random_eps(rng: np.random.Generator, space: MetricSpace) -> float:
    smallest = min_positive_distance(space)
    if smallest is None:
        return float(rng.uniform(0.1, 1.0))
    return float(rng.uniform(0.5 * smallest, 1.2 * diameter(space)))


def build_instance(seed: int, index: int, max_points: int, min_points: int = 1) -> Instance:
    """The index-th instance of a run; independent of how many others exist."""
    if not 1 <= min_points <= max_points:
        raise PreconditionError("need 1 <= min_points <= max_points")
    child = np.random.SeedSequence(seed_entropy(seed), spawn_key=(index,))
    rng = np.random.default_rng(child)
    n = int(rng.integers(min_points, max_points + 1))
    kind = KINDS[int(rng.integers(len(KINDS)))]
    space = _random_cloud(rng, n) if kind == "cloud" else _random_matrix(rng, n)
    return Instance(seed=seed, index=index, kind=kind, space=space, eps=_random_eps(rng, space))


def generate_instances(seed: int, count: int, max_points: int, min_points: int = 1) -> Iterator[Instance]:
    for index in range(count):
        yield build_instance(seed, index, max_points, min_points)


def instance_rng(instance: Instance, stream: int) -> np.random.Generator:
    """Generator for the random functions and subsets check number `stream` draws."""
    child = np.random.SeedSequence(seed_entropy(instance.seed), spawn_key=(instance.index, 1, stream))
    return np.random.default_rng(child)
