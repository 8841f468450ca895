"""
Mean existence over a decreasing eps schedule, and regularity profiles.

A finite domain stabilizes exactly once eps drops below its smallest spacing,
so the trail of bounds is the primary output; the verdict summarizes its tail.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from ..config import Config
from ..exceptions import CapExceeded, PreconditionError
from ..functions.models import FnSpec
from ..lattice.lattices import minimum_lattice_size
from ..lattice.search import SearchConfig, smallest_lattice_found
from ..logging_config import get_logger
from ..metric.models import Domain
from .bounds import bounds
from .models import Growth, MeanBounds, RegularityProfile, Schedule, SweepResult, Verdict

logger = get_logger(__name__)


def _verdict(
    trail: Sequence[MeanBounds],
    tol_gap: float,
    tol_drift: float,
    stable_steps: int,
    persistent_gap: float,
) -> Verdict:
    # schedules shorter than the window are judged on what they have
    tail = trail[-min(stable_steps, len(trail)):]
    settled = all(b.gap <= tol_gap for b in tail) and all(
        abs(cur.midpoint - prev.midpoint) <= tol_drift for prev, cur in zip(tail, tail[1:])
    )
    if settled:
        return Verdict.HAS_MEAN
    if all(b.exact and b.gap >= persistent_gap for b in tail):
        return Verdict.NO_MEAN
    return Verdict.INCONCLUSIVE


def sweep(
    domain: Domain,
    f: FnSpec,
    schedule: Schedule,
    tol_gap: Optional[float] = None,
    tol_drift: Optional[float] = None,
    stable_steps: Optional[int] = None,
    cap: Optional[int] = None,
    cfg: Optional[SearchConfig] = None,
    persistent_gap: Optional[float] = None,
    tie_tolerance: float = 0.0,
) -> SweepResult:
    """Bounds of f at every eps of the schedule plus a mean verdict.

    HasMean: over the last `stable_steps` steps the gap stays <= tol_gap and
    the midpoint moves by <= tol_drift between steps. NoMean: those steps are
    all exact and every gap is >= persistent_gap. Anything else is
    Inconclusive. Unset arguments come from Config.

    Returns:
        SweepResult whose mean_estimate is the final midpoint on HasMean
    """
    config = Config()
    tol_gap = config.tol_gap if tol_gap is None else tol_gap
    tol_drift = config.tol_drift if tol_drift is None else tol_drift
    stable_steps = config.stable_steps if stable_steps is None else stable_steps
    persistent_gap = config.gap_floor if persistent_gap is None else persistent_gap
    cfg = cfg or config.search_config()

    trail: List[MeanBounds] = []
    for eps in schedule.values():
        step = bounds(domain, f, eps, cap, cfg, tie_tolerance)
        logger.info(
            "eps=%.6g lower=%.17g upper=%.17g gap=%.3g %s",
            eps, step.lower, step.upper, step.gap, "exact" if step.exact else "heuristic",
        )
        trail.append(step)

    verdict = _verdict(trail, tol_gap, tol_drift, stable_steps, persistent_gap)
    estimate = trail[-1].midpoint if verdict is Verdict.HAS_MEAN else None
    logger.info("Sweep verdict %s (estimate %s)", verdict.value, estimate)
    return SweepResult(
        trail=tuple(trail),
        verdict=verdict,
        mean_estimate=estimate,
        gap_floor=min(b.gap for b in trail),
    )


def _min_size(domain: Domain, eps: float, cap: Optional[int], cfg: Optional[SearchConfig]) -> Tuple[int, bool]:
    try:
        return minimum_lattice_size(domain, eps, state_budget=cap), True
    except CapExceeded as e:
        logger.warning("eps=%g: %s, using the smallest lattice found", eps, e)
        return len(smallest_lattice_found(domain, eps, cfg or Config().search_config())), False


def regularity_profile(
    domain: Domain,
    schedule: Schedule,
    cap: Optional[int] = None,
    cfg: Optional[SearchConfig] = None,
) -> RegularityProfile:
    """Minimum lattice size of one domain along the schedule.

    A single finite domain is never regular: the best this can say is Bounded,
    when the final size has reached the whole domain.
    """
    eps_values = schedule.values()
    sizes, exact = zip(*(_min_size(domain, eps, cap, cfg) for eps in eps_values))
    verdict = Growth.BOUNDED if sizes[-1] == domain.size else Growth.INCONCLUSIVE
    logger.info("Regularity profile sizes=%s verdict=%s", list(sizes), verdict.value)
    return RegularityProfile(
        eps_values=tuple(eps_values),
        sizes=tuple(sizes),
        exact=tuple(exact),
        verdict=verdict,
        domain_sizes=(domain.size,) * len(eps_values),
    )


def refinement_profile(
    family: Sequence[Tuple[Domain, float]],
    cap: Optional[int] = None,
    cfg: Optional[SearchConfig] = None,
) -> RegularityProfile:
    """Minimum lattice size across a refinement family of (domain, eps) pairs.

    Sizes that strictly increase along the family are the finite surrogate
    of a regular domain; constant sizes are Bounded.
    """
    if not family:
        raise PreconditionError("refinement family is empty")
    sizes, exact = zip(*(_min_size(domain, eps, cap, cfg) for domain, eps in family))
    if len(sizes) > 1 and all(a < b for a, b in zip(sizes, sizes[1:])):
        verdict = Growth.GROWING
    elif len(set(sizes)) == 1:
        verdict = Growth.BOUNDED
    else:
        verdict = Growth.INCONCLUSIVE
    logger.info("Refinement profile sizes=%s verdict=%s", list(sizes), verdict.value)
    return RegularityProfile(
        eps_values=tuple(float(eps) for _, eps in family),
        sizes=tuple(sizes),
        exact=tuple(exact),
        verdict=verdict,
        domain_sizes=tuple(domain.size for domain, _ in family),
    )
