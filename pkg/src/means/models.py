from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from ..exceptions import PreconditionError
from ..lattice.models import Lattice


class Verdict(str, Enum):
    HAS_MEAN = "HasMean"
    NO_MEAN = "NoMean"
    INCONCLUSIVE = "Inconclusive"


class Growth(str, Enum):
    GROWING = "GrowingUnbounded-likely"
    BOUNDED = "Bounded"
    INCONCLUSIVE = "Inconclusive"


class CheckStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class MeanBounds:
    """Lower and upper mean of a function over the eps-lattices of a domain.

    lattice_count and min_lattice_size are only known when exact. For heuristic
    bounds the interval [lower, upper] lies inside the true one.
    """
    eps: float
    lower: float
    upper: float
    exact: bool
    witness_low: Lattice
    witness_high: Lattice
    lattice_count: Optional[int] = None
    min_lattice_size: Optional[int] = None

    @property
    def gap(self) -> float:
        return self.upper - self.lower

    @property
    def midpoint(self) -> float:
        return (self.lower + self.upper) / 2


@dataclass(frozen=True)
class Schedule:
    """Geometric eps schedule eps_k = eps0 * ratio**k, k = 0..steps-1."""
    eps0: float
    ratio: float
    steps: int

    def __post_init__(self):
        if not self.eps0 > 0:
            raise PreconditionError("eps0 must be positive")
        if not 0 < self.ratio < 1:
            raise PreconditionError("ratio must lie in (0, 1)")
        if self.steps < 1:
            raise PreconditionError("steps must be positive")

    def values(self) -> List[float]:
        return [self.eps0 * self.ratio ** k for k in range(self.steps)]


@dataclass(frozen=True)
class SweepResult:
    trail: Tuple[MeanBounds, ...]
    verdict: Verdict
    mean_estimate: Optional[float]
    gap_floor: float  # smallest upper - lower seen along the trail

    @property
    def final(self) -> MeanBounds:
        return self.trail[-1]

    @property
    def all_exact(self) -> bool:
        return all(b.exact for b in self.trail)


@dataclass(frozen=True)
class RegularityProfile:
    eps_values: Tuple[float, ...]
    sizes: Tuple[int, ...]       # minimum lattice size per eps (smallest found when not exact)
    exact: Tuple[bool, ...]
    verdict: Growth
    domain_sizes: Tuple[int, ...] = ()


@dataclass
class CheckReport:
    """Outcome of one invariant check.

    values holds the quantities that were compared, keyed by a short name,
    so a failing report can be read without re-running the check.
    """
    check: str
    status: CheckStatus = CheckStatus.PASSED
    violations: List[str] = field(default_factory=list)
    values: Dict[str, float] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASSED

    def require(self, condition: bool, message: str) -> None:
        """Record a violation (and fail the report) unless condition holds."""
        if not condition:
            self.violations.append(message)
            self.status = CheckStatus.FAILED

    def mark_inconclusive(self, message: str) -> None:
        if self.status is CheckStatus.PASSED:
            self.status = CheckStatus.INCONCLUSIVE
        self.notes.append(message)
