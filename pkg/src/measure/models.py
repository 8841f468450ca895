from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from ..lattice.models import Lattice
from ..means.models import SweepResult, Verdict


class Boundary(str, Enum):
    THIN = "ThinBoundary"
    NOT_THIN = "NotThin"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class MeasureResult:
    """(A|B): the mean of the indicator of A over the subspace B."""
    value: Optional[float]  # set iff verdict is HasMean
    verdict: Verdict
    trail: SweepResult

    @property
    def has_value(self) -> bool:
        return self.verdict is Verdict.HAS_MEAN


@dataclass(frozen=True)
class BoundaryRatioBounds:
    """Min and max of |A∩S| / |B∩S| over the eps-lattices S of a superset K.

    Lattices missing B entirely are skipped and counted; the ratios are None
    when every lattice was skipped. skipped is unknown (None) for heuristic
    bounds, which never see the full lattice family.
    """
    eps: float
    ratio_low: Optional[float]
    ratio_high: Optional[float]
    exact: bool
    skipped: Optional[int]
    witness_low: Optional[Lattice] = None
    witness_high: Optional[Lattice] = None
    lattice_count: Optional[int] = None

    @property
    def defined(self) -> bool:
        return self.ratio_low is not None

    @property
    def gap(self) -> Optional[float]:
        return None if not self.defined else self.ratio_high - self.ratio_low

    @property
    def midpoint(self) -> Optional[float]:
        return None if not self.defined else (self.ratio_low + self.ratio_high) / 2


@dataclass(frozen=True)
class SupersetTrail:
    """Ratio bounds along the schedule for one superset K."""
    superset_size: int
    trail: Tuple[BoundaryRatioBounds, ...]
    verdict: Boundary
    estimate: Optional[float]


@dataclass
class ThinBoundaryResult:
    verdict: Boundary
    value: Optional[float]
    supersets: List[SupersetTrail] = field(default_factory=list)
    relative: Optional[MeasureResult] = None  # (A|B) over the subspace B, for comparison
    notes: List[str] = field(default_factory=list)
