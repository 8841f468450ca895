"""
Relative measure (A|B) as the mean of an indicator over the subspace B.

Also holds the fixed-eps complement and disjoint-union inequalities, and
their limit-level counterpart (additivity of relative measure).
"""

from __future__ import annotations

from itertools import combinations
from typing import FrozenSet, Iterable, Optional, Sequence

from ..config import Config
from ..exceptions import PreconditionError
from ..functions.models import indicator
from ..lattice.search import SearchConfig
from ..logging_config import get_logger
from ..means.bounds import bounds_exact
from ..means.checks import at_most, close
from ..means.models import CheckReport, CheckStatus, Schedule, Verdict
from ..means.sweep import sweep
from ..metric.models import Domain
from ..metric.space import restrict
from .models import MeasureResult

logger = get_logger(__name__)


def as_id_set(ids: Iterable[int]) -> FrozenSet[int]:
    return frozenset(int(p) for p in ids)


def require_subset(inner: FrozenSet[int], outer: FrozenSet[int], inner_name: str, outer_name: str) -> None:
    extra = inner - outer
    if extra:
        raise PreconditionError(f"{inner_name} is not a subset of {outer_name} (extra ids {sorted(extra)[:5]})")


def require_in_domain(ids: FrozenSet[int], domain: Domain, name: str) -> None:
    require_subset(ids, frozenset(domain.ids), name, "the domain")


def relative_measure(
    a: Iterable[int],
    b: Iterable[int],
    space: Domain,
    schedule: Schedule,
    tol_gap: Optional[float] = None,
    tol_drift: Optional[float] = None,
    stable_steps: Optional[int] = None,
    cap: Optional[int] = None,
    cfg: Optional[SearchConfig] = None,
) -> MeasureResult:
    """(A|B): sweep the indicator of A over the subspace B.

    Raises:
        PreconditionError: A not inside B, or B empty
        PointIdError: B has ids outside the space
    """
    a, b = as_id_set(a), as_id_set(b)
    if not b:
        raise PreconditionError("B must be nonempty")
    require_subset(a, b, "A", "B")
    subspace = restrict(space, b)
    result = sweep(subspace, indicator(a), schedule, tol_gap, tol_drift, stable_steps, cap, cfg)
    logger.info("(A|B) over %d points: %s %s", len(b), result.verdict.value, result.mean_estimate)
    return MeasureResult(value=result.mean_estimate, verdict=result.verdict, trail=result)


def is_measurable(
    a: Iterable[int],
    k_domain: Domain,
    schedule: Schedule,
    tol_gap: Optional[float] = None,
    tol_drift: Optional[float] = None,
    stable_steps: Optional[int] = None,
    cap: Optional[int] = None,
    cfg: Optional[SearchConfig] = None,
) -> bool:
    """True iff the indicator of A settles to a mean over K on this schedule."""
    a = as_id_set(a)
    require_in_domain(a, k_domain, "A")
    result = sweep(k_domain, indicator(a), schedule, tol_gap, tol_drift, stable_steps, cap, cfg)
    return result.verdict is Verdict.HAS_MEAN


def complement_check(
    a: Iterable[int],
    k_domain: Domain,
    eps: float,
    cap: Optional[int] = None,
    slack: Optional[float] = None,
) -> CheckReport:
    """l(χ_A) + l(χ_{K∖A}) <= 1 <= u(χ_A) + u(χ_{K∖A}) at one eps.

    When both functions have zero gap the two sums must equal 1.
    """
    slack = Config().check_slack if slack is None else slack
    a = as_id_set(a)
    require_in_domain(a, k_domain, "A")
    rest = frozenset(k_domain.ids) - a
    report = CheckReport(check="complement")

    ba = bounds_exact(k_domain, indicator(a), eps, cap)
    bc = bounds_exact(k_domain, indicator(rest), eps, cap)
    low_sum, high_sum = ba.lower + bc.lower, ba.upper + bc.upper
    report.values.update({"lower_sum": low_sum, "upper_sum": high_sum})
    report.require(at_most(low_sum, 1.0, slack), f"l(χ_A) + l(χ_K∖A) = {low_sum!r} > 1")
    report.require(at_most(1.0, high_sum, slack), f"u(χ_A) + u(χ_K∖A) = {high_sum!r} < 1")
    if ba.gap == 0 and bc.gap == 0:
        report.require(close(low_sum, 1.0, slack), f"zero-gap sums {low_sum!r} != 1")
    return report


def _check_parts(parts: Sequence[FrozenSet[int]], k_domain: Domain) -> None:
    if not parts:
        raise PreconditionError("at least one part is required")
    for i, part in enumerate(parts):
        if not part:
            raise PreconditionError(f"part {i} is empty")
        require_in_domain(part, k_domain, f"part {i}")
    for (i, p), (j, q) in combinations(enumerate(parts), 2):
        if p & q:
            raise PreconditionError(f"parts {i} and {j} overlap at {sorted(p & q)[:5]}")


def disjoint_union_check(
    parts: Sequence[Iterable[int]],
    k_domain: Domain,
    eps: float,
    cap: Optional[int] = None,
    slack: Optional[float] = None,
) -> CheckReport:
    """Σ l(χ_An) <= l(χ_∪An) <= u(χ_∪An) <= Σ u(χ_An) at one eps.

    Raises:
        PreconditionError: empty or overlapping parts
        CapExceeded: too many lattices for exact bounds
    """
    slack = Config().check_slack if slack is None else slack
    parts = [as_id_set(p) for p in parts]
    _check_parts(parts, k_domain)
    report = CheckReport(check="disjoint_union")

    per_part = [bounds_exact(k_domain, indicator(p), eps, cap) for p in parts]
    union = bounds_exact(k_domain, indicator(frozenset().union(*parts)), eps, cap)
    low_sum = sum(b.lower for b in per_part)
    high_sum = sum(b.upper for b in per_part)
    report.values.update({"lower_sum": low_sum, "l(union)": union.lower, "u(union)": union.upper, "upper_sum": high_sum})
    report.require(at_most(low_sum, union.lower, slack), f"sum of lowers {low_sum!r} > l(union)={union.lower!r}")
    report.require(at_most(union.lower, union.upper, slack), "l(union) > u(union)")
    report.require(at_most(union.upper, high_sum, slack), f"u(union)={union.upper!r} > sum of uppers {high_sum!r}")
    return report


def additivity_check(
    parts: Sequence[Iterable[int]],
    k_domain: Domain,
    schedule: Schedule,
    tol: float = 1e-9,
    cap: Optional[int] = None,
    cfg: Optional[SearchConfig] = None,
) -> CheckReport:
    """(∪An|K) = Σ (An|K) when every part and the union have a measure."""
    parts = [as_id_set(p) for p in parts]
    _check_parts(parts, k_domain)
    everything = frozenset(k_domain.ids)
    report = CheckReport(check="additivity")

    measures = [relative_measure(p, everything, k_domain, schedule, cap=cap, cfg=cfg) for p in parts]
    union = relative_measure(frozenset().union(*parts), everything, k_domain, schedule, cap=cap, cfg=cfg)
    if not union.has_value or not all(m.has_value for m in measures):
        report.mark_inconclusive("some part or the union has no settled measure")
        return report
    total = sum(m.value for m in measures)
    report.values.update({"union": union.value, "sum": total})
    report.require(abs(union.value - total) <= tol, f"(union|K)={union.value!r} != sum of parts {total!r}")
    if report.status is CheckStatus.FAILED:
        logger.warning("additivity failed: %s", report.violations)
    return report
