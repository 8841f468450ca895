"""
Thin boundaries: count ratios |A∩S| / |B∩S| over the eps-lattices S of an
ambient superset K, and the product rule (A|C) = (A|B)(B|C) they satisfy.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ..config import Config
from ..exceptions import CapExceeded, PreconditionError
from ..lattice.conflict import subset_mask
from ..lattice.lattices import LatticeCache, enumerate_lattices
from ..lattice.models import ConflictGraph, Direction
from ..lattice.search import Objective, SearchConfig, search_lattices
from ..logging_config import get_logger
from ..means.models import CheckReport, Schedule
from ..metric.models import Domain, MetricSpace, Subspace
from .models import Boundary, BoundaryRatioBounds, SupersetTrail, ThinBoundaryResult
from .relative import as_id_set, relative_measure, require_in_domain, require_subset

logger = get_logger(__name__)


class RatioObjective(Objective):
    """|A∩S| / |B∩S| on local-index masks; undefined when S misses B."""

    def __init__(self, a_mask: int, b_mask: int):
        self.a_mask = a_mask
        self.b_mask = b_mask

    def score(self, mask: int) -> Optional[float]:
        in_b = (mask & self.b_mask).bit_count()
        if not in_b:
            return None
        return (mask & self.a_mask).bit_count() / in_b

    def priority(self, local: int) -> float:
        bit = 1 << local
        if self.a_mask & bit:
            return 1.0
        if self.b_mask & bit:
            return 0.0
        return 0.5


def boundary_ratio_bounds(
    a: Iterable[int],
    b: Iterable[int],
    k_space: Domain,
    eps: float,
    cap: Optional[int] = None,
    cfg: Optional[SearchConfig] = None,
    heuristic: bool = True,
    cache: Optional[LatticeCache] = None,
) -> BoundaryRatioBounds:
    """Min and max of |A∩S| / |B∩S| over the eps-lattices of K.

    Exact by enumeration when it fits under the cap; otherwise a ratio search
    gives an inner approximation, unless heuristic is off. Lattices come from
    `cache` when one is given.

    Raises:
        PreconditionError: A not inside B, or B not inside K
        CapExceeded: enumeration overflowed and heuristic is off
    """
    a, b = as_id_set(a), as_id_set(b)
    require_subset(a, b, "A", "B")
    require_in_domain(b, k_space, "B")

    try:
        if cache is not None:
            lattices = cache.lattices(k_space, eps, cap)
        else:
            lattices = enumerate_lattices(k_space, eps, cap)
    except CapExceeded:
        if not heuristic:
            raise
        return _ratio_heuristic(a, b, k_space, eps, cfg or Config().search_config())

    low = high = None
    witness_low = witness_high = None
    skipped = 0
    for lattice in lattices:
        members = set(lattice.members)
        in_b = len(members & b)
        if not in_b:
            skipped += 1
            continue
        ratio = len(members & a) / in_b
        if low is None or ratio < low:
            low, witness_low = ratio, lattice
        if high is None or ratio > high:
            high, witness_high = ratio, lattice
    if skipped:
        logger.debug("eps=%g: %d of %d lattices miss B", eps, skipped, len(lattices))
    return BoundaryRatioBounds(
        eps=float(eps),
        ratio_low=low,
        ratio_high=high,
        exact=True,
        skipped=skipped,
        witness_low=witness_low,
        witness_high=witness_high,
        lattice_count=len(lattices),
    )


def _ratio_heuristic(a, b, k_space: Domain, eps: float, cfg: SearchConfig) -> BoundaryRatioBounds:
    a_mask, b_mask = subset_mask(k_space, a), subset_mask(k_space, b)

    def factory(_graph: ConflictGraph) -> RatioObjective:
        return RatioObjective(a_mask, b_mask)

    low = search_lattices(k_space, eps, factory, Direction.MINIMIZE, cfg)
    high = search_lattices(k_space, eps, factory, Direction.MAXIMIZE, cfg)
    if low is None or high is None:
        return BoundaryRatioBounds(eps=float(eps), ratio_low=None, ratio_high=None, exact=False, skipped=None)
    if high.value < low.value:
        low, high = high, low
    return BoundaryRatioBounds(
        eps=float(eps),
        ratio_low=low.value,
        ratio_high=high.value,
        exact=False,
        skipped=None,
        witness_low=low.lattice,
        witness_high=high.lattice,
    )


def _superset_verdict(
    trail: Sequence[BoundaryRatioBounds],
    tol: float,
    stable_steps: int,
    persistent_gap: float,
) -> Tuple[Boundary, Optional[float]]:
    tail = trail[-min(stable_steps, len(trail)):]
    if not all(r.exact and r.defined for r in tail):
        return Boundary.INCONCLUSIVE, None
    settled = all(r.gap <= tol for r in tail) and all(
        abs(cur.midpoint - prev.midpoint) <= tol for prev, cur in zip(tail, tail[1:])
    )
    if settled:
        return Boundary.THIN, tail[-1].midpoint
    if all(r.gap >= persistent_gap for r in tail):
        return Boundary.NOT_THIN, None
    return Boundary.INCONCLUSIVE, None


def _as_supersets(k_spaces: Union[Domain, Sequence[Domain]]) -> List[Domain]:
    if isinstance(k_spaces, (MetricSpace, Subspace)):
        return [k_spaces]
    supersets = list(k_spaces)
    if not supersets:
        raise PreconditionError("at least one superset K is required")
    return supersets


def thin_boundary_verdict(
    a: Iterable[int],
    b: Iterable[int],
    k_spaces: Union[Domain, Sequence[Domain]],
    schedule: Schedule,
    tol: float = 1e-9,
    cap: Optional[int] = None,
    cfg: Optional[SearchConfig] = None,
    stable_steps: Optional[int] = None,
    cross_check: bool = True,
    cache: Optional[LatticeCache] = None,
) -> ThinBoundaryResult:
    """Does A have a thin boundary with B, and with what value?

    Each superset K gets its own ratio trail and verdict. The combined verdict
    is ThinBoundary only when every K is thin and their estimates agree within
    tol; any NotThin superset makes it NotThin. With cross_check on, (A|B)
    over the subspace B is computed too, and a settled value that disagrees
    with the ratio limit by more than tol downgrades ThinBoundary to
    Inconclusive.
    """
    config = Config()
    stable_steps = config.stable_steps if stable_steps is None else stable_steps
    a, b = as_id_set(a), as_id_set(b)
    if not b:
        raise PreconditionError("B must be nonempty")
    require_subset(a, b, "A", "B")
    supersets = _as_supersets(k_spaces)

    result = ThinBoundaryResult(verdict=Boundary.INCONCLUSIVE, value=None)
    for k_space in supersets:
        require_in_domain(b, k_space, "B")
        trail = tuple(boundary_ratio_bounds(a, b, k_space, eps, cap, cfg, cache=cache) for eps in schedule.values())
        verdict, estimate = _superset_verdict(trail, tol, stable_steps, config.gap_floor)
        logger.info("Thin boundary over |K|=%d: %s %s", k_space.size, verdict.value, estimate)
        result.supersets.append(SupersetTrail(k_space.size, trail, verdict, estimate))

    verdicts = [s.verdict for s in result.supersets]
    estimates = [s.estimate for s in result.supersets]
    if Boundary.NOT_THIN in verdicts:
        result.verdict = Boundary.NOT_THIN
    elif all(v is Boundary.THIN for v in verdicts):
        if max(estimates) - min(estimates) <= tol:
            result.verdict, result.value = Boundary.THIN, estimates[-1]
        else:
            result.notes.append(f"supersets disagree on the limit: {estimates}")

    if cross_check:
        result.relative = relative_measure(a, b, supersets[0], schedule, cap=cap, cfg=cfg)
        rel = result.relative
        if result.verdict is Boundary.THIN and rel.has_value and abs(rel.value - result.value) > tol:
            result.notes.append(f"ratio limit {result.value!r} disagrees with (A|B)={rel.value!r}")
            result.verdict, result.value = Boundary.INCONCLUSIVE, None
    return result


def composition_check(
    a: Iterable[int],
    b: Iterable[int],
    c: Iterable[int],
    k_spaces: Union[Domain, Sequence[Domain]],
    schedule: Schedule,
    tol: float = 0.02,
    cap: Optional[int] = None,
    cfg: Optional[SearchConfig] = None,
) -> CheckReport:
    """(A|C) = (A|B)·(B|C) for nested A ⊆ B ⊆ C, when all three are thin.

    The three verdicts share one enumeration per superset and eps.
    """
    a, b, c = as_id_set(a), as_id_set(b), as_id_set(c)
    require_subset(a, b, "A", "B")
    require_subset(b, c, "B", "C")
    report = CheckReport(check="composition")
    cache = LatticeCache()

    ab = thin_boundary_verdict(a, b, k_spaces, schedule, cap=cap, cfg=cfg, cache=cache)
    bc = thin_boundary_verdict(b, c, k_spaces, schedule, cap=cap, cfg=cfg, cache=cache)
    ac = thin_boundary_verdict(a, c, k_spaces, schedule, cap=cap, cfg=cfg, cache=cache)
    if not all(r.verdict is Boundary.THIN for r in (ab, bc, ac)):
        report.mark_inconclusive("not every pair has a thin boundary on this schedule")
        return report
    report.values.update({"(A|B)": ab.value, "(B|C)": bc.value, "(A|C)": ac.value})
    product = ab.value * bc.value
    report.require(abs(ac.value - product) <= tol, f"(A|C)={ac.value!r} != (A|B)(B|C)={product!r}")
    return report
