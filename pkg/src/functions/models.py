"""
Real-valued functions on the points of a space.

Every variant is immutable. Functions are bound to a domain with bind(), which
rejects partial functions (missing table entries, missing axes) up front.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Tuple, Union

from ..exceptions import FunctionBindingError
from ..metric.models import Domain


@dataclass(frozen=True)
class Constant:
    value: float

    def evaluate(self, domain: Domain, pid: int) -> float:
        domain.local_index(pid)
        return float(self.value)


@dataclass(frozen=True)
class Coordinate:
    axis: int

    def evaluate(self, domain: Domain, pid: int) -> float:
        return _axis_value(domain, pid, self.axis)


@dataclass(frozen=True)
class Polynomial:
    """c0 + c1·x + c2·x² + ... in coordinate `axis`, evaluated by Horner's rule."""
    axis: int
    coefficients: Tuple[float, ...]

    def evaluate(self, domain: Domain, pid: int) -> float:
        x = _axis_value(domain, pid, self.axis)
        total = 0.0
        for c in reversed(self.coefficients):
            total = total * x + float(c)
        return total


@dataclass(frozen=True)
class Table:
    values: Dict[int, float] = field(hash=False)

    def evaluate(self, domain: Domain, pid: int) -> float:
        domain.local_index(pid)
        try:
            return float(self.values[pid])
        except KeyError:
            raise FunctionBindingError(f"table has no value for point {pid}") from None


@dataclass(frozen=True)
class Indicator:
    members: FrozenSet[int]

    def evaluate(self, domain: Domain, pid: int) -> float:
        domain.local_index(pid)
        return 1.0 if pid in self.members else 0.0


@dataclass(frozen=True)
class LinearCombo:
    """Finite weighted sum; terms are summed left to right."""
    terms: Tuple[Tuple[float, "FnSpec"], ...]

    def __post_init__(self):
        if not self.terms:
            raise FunctionBindingError("linear combination needs at least one term")

    def evaluate(self, domain: Domain, pid: int) -> float:
        total = 0.0
        for weight, fn in self.terms:
            total += float(weight) * fn.evaluate(domain, pid)
        return total


FnSpec = Union[Constant, Coordinate, Polynomial, Table, Indicator, LinearCombo]


def _axis_value(domain: Domain, pid: int, axis: int) -> float:
    point = domain.coords_of(pid)
    if point is None:
        raise FunctionBindingError("coordinate functions need a space with coordinates")
    if not 0 <= axis < point.shape[0]:
        raise FunctionBindingError(f"axis {axis} out of range for dimension {point.shape[0]}")
    return float(point[axis])


def evaluate(f: FnSpec, space: Domain, p: int) -> float:
    """Value of f at point p of the space."""
    return f.evaluate(space, p)


def bind(f: FnSpec, domain: Domain) -> Tuple[float, ...]:
    """Evaluate f at every point of the domain, in local index order.

    Raises:
        FunctionBindingError: f is not total on the domain
    """
    return tuple(f.evaluate(domain, pid) for pid in domain.ids)


def indicator(subset: Iterable[int]) -> Indicator:
    """χ of a point-id set: 1 on the set, 0 elsewhere."""
    return Indicator(frozenset(int(p) for p in subset))


def combine(alpha: float, f: FnSpec, beta: float, g: FnSpec) -> LinearCombo:
    """α·f + β·g pointwise."""
    return LinearCombo(((float(alpha), f), (float(beta), g)))


def negate(f: FnSpec) -> LinearCombo:
    return LinearCombo(((-1.0, f),))


def scale(alpha: float, f: FnSpec) -> LinearCombo:
    return LinearCombo(((float(alpha), f),))


def shift(f: FnSpec, c: float) -> LinearCombo:
    """f + c."""
    return LinearCombo(((1.0, f), (float(c), Constant(1.0))))


def table(values: Dict[int, float]) -> Table:
    return Table({int(k): float(v) for k, v in values.items()})
