from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

import numpy as np

from ..exceptions import PointIdError

NAMED_METRICS = ("euclidean", "manhattan", "chebyshev")
MATRIX_METRIC = "matrix"


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=float, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class MetricSpace:
    """Finite point set with a distance oracle.

    Point ids are dense in [0, n). Distances are stored eagerly as an n×n
    matrix, whichever way they were supplied.
    """
    n: int
    metric: str
    matrix: np.ndarray
    labels: Optional[Tuple[Optional[str], ...]] = None
    coords: Optional[np.ndarray] = None

    def __post_init__(self):
        object.__setattr__(self, "matrix", _frozen(self.matrix))
        if self.coords is not None:
            object.__setattr__(self, "coords", _frozen(self.coords))

    @property
    def ids(self) -> Tuple[int, ...]:
        return tuple(range(self.n))

    @property
    def size(self) -> int:
        return self.n

    @property
    def root(self) -> "MetricSpace":
        return self

    def contains(self, pid: int) -> bool:
        return 0 <= pid < self.n

    def local_index(self, pid: int) -> int:
        if not isinstance(pid, (int, np.integer)) or not self.contains(int(pid)):
            raise PointIdError(f"point id {pid!r} out of range [0, {self.n})")
        return int(pid)

    def distance(self, i: int, j: int) -> float:
        return float(self.matrix[self.local_index(i), self.local_index(j)])

    def coords_of(self, pid: int) -> Optional[np.ndarray]:
        if self.coords is None:
            return None
        return self.coords[self.local_index(pid)]

    @property
    def dimension(self) -> Optional[int]:
        return None if self.coords is None else int(self.coords.shape[1])


@dataclass(frozen=True, eq=False)
class Subspace:
    """A nonempty subset of a parent space that inherits its distances.

    Members are parent point ids, kept sorted; local index k refers to
    members[k].
    """
    parent: MetricSpace
    members: Tuple[int, ...]
    matrix: np.ndarray = field(init=False, repr=False)
    _positions: dict = field(init=False, repr=False)

    def __post_init__(self):
        members = tuple(sorted(self.members))
        object.__setattr__(self, "members", members)
        index = np.array(members, dtype=int)
        object.__setattr__(self, "matrix", _frozen(self.parent.matrix[np.ix_(index, index)]))
        object.__setattr__(self, "_positions", {pid: k for k, pid in enumerate(members)})

    @property
    def ids(self) -> Tuple[int, ...]:
        return self.members

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def root(self) -> MetricSpace:
        return self.parent

    @property
    def coords(self) -> Optional[np.ndarray]:
        if self.parent.coords is None:
            return None
        return self.parent.coords[list(self.members)]

    @property
    def metric(self) -> str:
        return self.parent.metric

    @property
    def dimension(self) -> Optional[int]:
        return self.parent.dimension

    def contains(self, pid: int) -> bool:
        return pid in self._positions

    def local_index(self, pid: int) -> int:
        try:
            return self._positions[int(pid)]
        except (KeyError, TypeError, ValueError):
            raise PointIdError(f"point id {pid!r} is not a member of this subspace") from None

    def distance(self, i: int, j: int) -> float:
        return float(self.matrix[self.local_index(i), self.local_index(j)])

    def coords_of(self, pid: int) -> Optional[np.ndarray]:
        self.local_index(pid)
        return self.parent.coords_of(pid)


Domain = Union[MetricSpace, Subspace]


@dataclass(frozen=True)
class Violation:
    """One violated (or suspicious) axiom instance.

    points: (i, i) for identity, (i, j) for symmetry and pseudo-metric pairs,
    (i, k, j) for a triangle violation d(i,j) > d(i,k) + d(k,j).
    amount: by how much the axiom is missed.
    """
    kind: str
    points: Tuple[int, ...]
    amount: float


@dataclass
class ValidationReport:
    tolerance: float
    violations: List[Violation] = field(default_factory=list)
    warnings: List[Violation] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def __len__(self) -> int:
        return len(self.violations)
