"""
Fixed-eps and limit-level identities of the mean, checked on concrete inputs.

Each check computes the quantities involved, records them in a CheckReport
and fails the report on any violation beyond the configured slack. The
fixed-eps checks need exact bounds and let CapExceeded propagate.
"""

from __future__ import annotations

from typing import Dict, Iterable, Optional, Sequence

from ..config import Config
from ..exceptions import PreconditionError
from ..functions.models import FnSpec, LinearCombo, bind, combine, negate, scale, shift, table
from ..lattice.search import SearchConfig
from ..logging_config import get_logger
from ..metric.models import Domain
from .bounds import bounds_exact
from .models import CheckReport, CheckStatus, Schedule, Verdict
from .sweep import sweep

logger = get_logger(__name__)


def _slack(slack: Optional[float]) -> float:
    return Config().check_slack if slack is None else slack


def _scale_of(*xs: float) -> float:
    return max(1.0, *(abs(x) for x in xs))


def close(a: float, b: float, slack: float) -> bool:
    """a == b up to relative slack (absolute below magnitude 1)."""
    return abs(a - b) <= slack * _scale_of(a, b)


def at_most(a: float, b: float, slack: float) -> bool:
    """a <= b up to relative slack (absolute below magnitude 1)."""
    return a <= b + slack * _scale_of(a, b)


def _finish(report: CheckReport) -> CheckReport:
    if report.status is CheckStatus.FAILED:
        logger.warning("%s failed: %s", report.check, "; ".join(report.violations))
    else:
        logger.debug("%s %s", report.check, report.status.value)
    return report


def algebra_check(
    domain: Domain,
    f: FnSpec,
    g: FnSpec,
    alpha: float,
    beta: float,
    eps: float,
    cap: Optional[int] = None,
    slack: Optional[float] = None,
) -> CheckReport:
    """Algebra of lower/upper means at one eps, with exact bounds.

    Covers negation duality, homogeneity (order-reversing for negative
    weights), the subadditivity chain for f+g and alpha*f+beta*g, pointwise
    dominance between f and g, and the constant bounds min f <= l(f) <=
    u(f) <= max f together with l(f) >= alpha when f >= alpha pointwise.
    """
    slack = _slack(slack)
    report = CheckReport(check="algebra")
    bf = bounds_exact(domain, f, eps, cap)
    bg = bounds_exact(domain, g, eps, cap)
    b_neg = bounds_exact(domain, negate(f), eps, cap)
    b_af = bounds_exact(domain, scale(alpha, f), eps, cap)
    b_bg = bounds_exact(domain, scale(beta, g), eps, cap)
    b_sum = bounds_exact(domain, combine(1.0, f, 1.0, g), eps, cap)
    b_lin = bounds_exact(domain, combine(alpha, f, beta, g), eps, cap)
    report.values.update({
        "l(f)": bf.lower, "u(f)": bf.upper, "l(g)": bg.lower, "u(g)": bg.upper,
        "l(-f)": b_neg.lower, "u(-f)": b_neg.upper,
        "l(f+g)": b_sum.lower, "u(f+g)": b_sum.upper,
    })

    report.require(close(b_neg.lower, -bf.upper, slack), f"l(-f)={b_neg.lower!r} != -u(f)={-bf.upper!r}")
    report.require(close(b_neg.upper, -bf.lower, slack), f"u(-f)={b_neg.upper!r} != -l(f)={-bf.lower!r}")

    for weight, base, weighted, name in ((alpha, bf, b_af, "f"), (beta, bg, b_bg, "g")):
        lo, hi = (base.lower, base.upper) if weight >= 0 else (base.upper, base.lower)
        report.require(close(weighted.lower, weight * lo, slack), f"l({weight}{name})={weighted.lower!r} != {weight * lo!r}")
        report.require(close(weighted.upper, weight * hi, slack), f"u({weight}{name})={weighted.upper!r} != {weight * hi!r}")

    for name, parts, total in (("f+g", (bf, bg), b_sum), ("af+bg", (b_af, b_bg), b_lin)):
        low_sum = parts[0].lower + parts[1].lower
        high_sum = parts[0].upper + parts[1].upper
        report.require(at_most(low_sum, total.lower, slack), f"sum of lowers {low_sum!r} > l({name})={total.lower!r}")
        report.require(at_most(total.lower, total.upper, slack), f"l({name}) > u({name})")
        report.require(at_most(total.upper, high_sum, slack), f"u({name})={total.upper!r} > sum of uppers {high_sum!r}")

    fv, gv = bind(f, domain), bind(g, domain)
    if all(a >= b for a, b in zip(fv, gv)):
        report.require(at_most(bg.lower, bf.lower, slack), "f >= g but l(f) < l(g)")
        report.require(at_most(bg.upper, bf.upper, slack), "f >= g but u(f) < u(g)")

    report.require(at_most(min(fv), bf.lower, slack), f"l(f)={bf.lower!r} below min f={min(fv)!r}")
    report.require(at_most(bf.upper, max(fv), slack), f"u(f)={bf.upper!r} above max f={max(fv)!r}")
    if min(fv) >= alpha:
        report.require(at_most(alpha, bf.lower, slack), f"f >= {alpha} but l(f)={bf.lower!r}")
        report.require(at_most(alpha, bf.upper, slack), f"f >= {alpha} but u(f)={bf.upper!r}")
    return _finish(report)


def shift_check(
    domain: Domain,
    f: FnSpec,
    c: float,
    eps: float,
    cap: Optional[int] = None,
    slack: Optional[float] = None,
) -> CheckReport:
    """Bounds of f + c equal the bounds of f shifted by c."""
    slack = _slack(slack)
    report = CheckReport(check="constant_shift")
    bf = bounds_exact(domain, f, eps, cap)
    bs = bounds_exact(domain, shift(f, c), eps, cap)
    report.values.update({"l(f)": bf.lower, "u(f)": bf.upper, "l(f+c)": bs.lower, "u(f+c)": bs.upper})
    report.require(close(bs.lower, bf.lower + c, slack), f"l(f+c)={bs.lower!r} != l(f)+c={bf.lower + c!r}")
    report.require(close(bs.upper, bf.upper + c, slack), f"u(f+c)={bs.upper!r} != u(f)+c={bf.upper + c!r}")
    return _finish(report)


def finite_modification_check(
    domain: Domain,
    f: FnSpec,
    modified_points: Sequence[int],
    deltas: Sequence[float],
    eps: float,
    cap: Optional[int] = None,
    slack: Optional[float] = None,
) -> CheckReport:
    """Changing f at m points moves l and u by at most m*max|delta| / min |S|.

    Raises:
        PreconditionError: mismatched or repeated points
    """
    if len(modified_points) != len(deltas):
        raise PreconditionError("one delta per modified point is required")
    if len(set(modified_points)) != len(modified_points):
        raise PreconditionError("modified points must be distinct")
    slack = _slack(slack)
    report = CheckReport(check="finite_modification")

    changes: Dict[int, float] = {pid: 0.0 for pid in domain.ids}
    for pid, delta in zip(modified_points, deltas):
        domain.local_index(pid)
        changes[pid] = float(delta)
    g = LinearCombo(((1.0, f), (1.0, table(changes))))

    bf = bounds_exact(domain, f, eps, cap)
    bg = bounds_exact(domain, g, eps, cap)
    largest = max((abs(d) for d in deltas), default=0.0)
    bound = len(modified_points) * largest / bf.min_lattice_size
    report.values.update({
        "bound": bound,
        "shift_lower": abs(bg.lower - bf.lower),
        "shift_upper": abs(bg.upper - bf.upper),
    })
    report.require(at_most(abs(bg.lower - bf.lower), bound, slack), f"lower moved by {abs(bg.lower - bf.lower)!r} > {bound!r}")
    report.require(at_most(abs(bg.upper - bf.upper), bound, slack), f"upper moved by {abs(bg.upper - bf.upper)!r} > {bound!r}")
    return _finish(report)


def linearity_check(
    domain: Domain,
    f: FnSpec,
    g: FnSpec,
    alpha: float,
    beta: float,
    schedule: Schedule,
    tol: float = 1e-9,
    cap: Optional[int] = None,
    cfg: Optional[SearchConfig] = None,
) -> CheckReport:
    """(alpha*f + beta*g)^ = alpha*f^ + beta*g^ when all three means exist."""
    report = CheckReport(check="linearity")
    runs = {
        "f": sweep(domain, f, schedule, cap=cap, cfg=cfg),
        "g": sweep(domain, g, schedule, cap=cap, cfg=cfg),
        "af+bg": sweep(domain, combine(alpha, f, beta, g), schedule, cap=cap, cfg=cfg),
    }
    if any(r.verdict is not Verdict.HAS_MEAN for r in runs.values()):
        report.mark_inconclusive("not every function reached HasMean on this schedule")
        return _finish(report)
    expected = alpha * runs["f"].mean_estimate + beta * runs["g"].mean_estimate
    actual = runs["af+bg"].mean_estimate
    report.values.update({"expected": expected, "actual": actual})
    report.require(abs(actual - expected) <= tol, f"mean of combination {actual!r} != {expected!r}")
    return _finish(report)


def uniform_limit_check(
    domain: Domain,
    f: FnSpec,
    g: FnSpec,
    ns: Iterable[int],
    schedule: Schedule,
    tol: float = 1e-9,
    cap: Optional[int] = None,
    cfg: Optional[SearchConfig] = None,
) -> CheckReport:
    """Means of f_n = f + g/n stay within max|g|/n + tol of the mean of f."""
    report = CheckReport(check="uniform_limit")
    base = sweep(domain, f, schedule, cap=cap, cfg=cfg)
    if base.verdict is not Verdict.HAS_MEAN:
        report.mark_inconclusive("f has no settled mean on this schedule")
        return _finish(report)
    sup_g = max(abs(v) for v in bind(g, domain))
    report.values["f_hat"] = base.mean_estimate

    for n in ns:
        if n < 1:
            raise PreconditionError("sequence indices must be positive")
        run = sweep(domain, combine(1.0, f, 1.0 / n, g), schedule, cap=cap, cfg=cfg)
        if run.verdict is not Verdict.HAS_MEAN:
            report.mark_inconclusive(f"f_{n} has no settled mean on this schedule")
            continue
        drift = abs(run.mean_estimate - base.mean_estimate)
        report.values[f"drift_{n}"] = drift
        report.require(drift <= sup_g / n + tol, f"n={n}: drift {drift!r} > {sup_g / n + tol!r}")
    return _finish(report)

