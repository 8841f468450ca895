"""
Randomized invariant registry.

Every check in REGISTRY runs on every generated instance with its own seeded
generator; the uniform-limit check runs once on a fixed grid. A failure
carries the (seed, instance, eps) triple needed to rebuild its input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..config import Config
from ..exceptions import CapExceeded
from ..functions.models import Coordinate, Table, indicator
from ..lattice.lattices import enumerate_lattices, greedy_lattice, is_lattice, random_lattice
from ..lattice.models import seed_entropy
from ..lattice.search import SearchConfig
from ..logging_config import get_logger
from ..means.bounds import bounds_exact, bounds_heuristic
from ..means.checks import algebra_check, at_most, finite_modification_check, shift_check, uniform_limit_check
from ..means.models import CheckReport, CheckStatus, Schedule
from ..measure.boundary import boundary_ratio_bounds
from ..measure.relative import complement_check, disjoint_union_check
from ..metric.models import Domain
from ..metric.space import diameter, min_positive_distance, restrict, uniform_grid
from .instances import Instance, generate_instances, instance_rng

logger = get_logger(__name__)


@dataclass(frozen=True)
class SuiteSettings:
    cap: Optional[int]
    slack: float
    search: SearchConfig


Check = Callable[[Instance, np.random.Generator, SuiteSettings], CheckReport]


def _random_table(rng: np.random.Generator, domain: Domain) -> Table:
    return Table({pid: float(v) for pid, v in zip(domain.ids, rng.uniform(-1.0, 1.0, domain.size))})


def _random_subset(rng: np.random.Generator, ids, nonempty: bool = False) -> frozenset:
    ids = list(ids)
    chosen = frozenset(p for p, keep in zip(ids, rng.random(len(ids)) < 0.5) if keep)
    if nonempty and not chosen:
        chosen = frozenset([ids[int(rng.integers(len(ids)))]])
    return chosen


def check_lattice_validity(inst: Instance, rng: np.random.Generator, s: SuiteSettings) -> CheckReport:
    space, eps = inst.space, inst.eps
    report = CheckReport(check="lattice_validity")
    lattices = enumerate_lattices(space, eps, s.cap)
    family = {lat.members for lat in lattices}
    report.values["lattice_count"] = len(lattices)
    report.require(len(family) == len(lattices), "enumeration produced a duplicate lattice")
    for lat in lattices:
        report.require(is_lattice(space, lat.members, eps), f"{lat.members} is not an eps-lattice")

    greedy = greedy_lattice(space, eps, [int(p) for p in rng.permutation(space.size)])
    report.require(greedy.members in family, f"greedy lattice {greedy.members} not enumerated")
    seeded = random_lattice(space, eps, int(rng.integers(2**32)))
    report.require(seeded.members in family, f"random lattice {seeded.members} not enumerated")

    if eps > diameter(space):
        report.require(family == {(p,) for p in space.ids}, "eps above the diameter must give singletons")
    smallest = min_positive_distance(space)
    distinct = all(space.distance(i, j) > 0 for i, j in combinations(space.ids, 2))
    if distinct and (smallest is None or eps <= smallest):
        report.require(family == {tuple(space.ids)}, "eps below the spacing must give the whole domain")
    return report


def check_algebra(inst: Instance, rng: np.random.Generator, s: SuiteSettings) -> CheckReport:
    f = _random_table(rng, inst.space)
    if rng.random() < 0.5:
        drops = rng.uniform(0.0, 1.0, inst.space.size)
        g = Table({pid: f.values[pid] - float(d) for pid, d in zip(inst.space.ids, drops)})
    else:
        g = _random_table(rng, inst.space)
    alpha = float(rng.uniform(-2.0, 2.0))
    beta = float(rng.uniform(0.0, 2.0))
    return algebra_check(inst.space, f, g, alpha, beta, inst.eps, s.cap, s.slack)


def check_constant_shift(inst: Instance, rng: np.random.Generator, s: SuiteSettings) -> CheckReport:
    return shift_check(inst.space, _random_table(rng, inst.space), float(rng.uniform(-3.0, 3.0)), inst.eps, s.cap, s.slack)


def check_complement(inst: Instance, rng: np.random.Generator, s: SuiteSettings) -> CheckReport:
    return complement_check(_random_subset(rng, inst.space.ids), inst.space, inst.eps, s.cap, s.slack)


def check_disjoint_union(inst: Instance, rng: np.random.Generator, s: SuiteSettings) -> CheckReport:
    pool = sorted(_random_subset(rng, inst.space.ids, nonempty=True))
    k = int(rng.integers(1, min(3, len(pool)) + 1))
    labels = np.concatenate([np.arange(k), rng.integers(0, k, len(pool) - k)])
    rng.shuffle(labels)
    parts = [[p for p, label in zip(pool, labels) if label == part] for part in range(k)]
    return disjoint_union_check(parts, inst.space, inst.eps, s.cap, s.slack)


def check_finite_modification(inst: Instance, rng: np.random.Generator, s: SuiteSettings) -> CheckReport:
    m = int(rng.integers(0, min(3, inst.space.size) + 1))
    points = [int(p) for p in rng.choice(inst.space.size, size=m, replace=False)]
    deltas = [float(d) for d in rng.uniform(-1.0, 1.0, m)]
    f = _random_table(rng, inst.space)
    return finite_modification_check(inst.space, f, points, deltas, inst.eps, s.cap, s.slack)


def check_boundary_indicator(inst: Instance, rng: np.random.Generator, s: SuiteSettings) -> CheckReport:
    report = CheckReport(check="boundary_indicator")
    a = _random_subset(rng, inst.space.ids)
    ratios = boundary_ratio_bounds(a, inst.space.ids, inst.space, inst.eps, s.cap, heuristic=False)
    means = bounds_exact(inst.space, indicator(a), inst.eps, s.cap)
    report.values.update({"ratio_low": ratios.ratio_low, "lower": means.lower})
    report.require(ratios.ratio_low == means.lower, f"ratio_low {ratios.ratio_low!r} != l(χ_A) {means.lower!r}")
    report.require(ratios.ratio_high == means.upper, f"ratio_high {ratios.ratio_high!r} != u(χ_A) {means.upper!r}")
    return report


def check_ratio_monotonicity(inst: Instance, rng: np.random.Generator, s: SuiteSettings) -> CheckReport:
    report = CheckReport(check="ratio_monotonicity")
    b = _random_subset(rng, inst.space.ids, nonempty=True)
    wide = _random_subset(rng, sorted(b))
    narrow = _random_subset(rng, sorted(wide))
    small = boundary_ratio_bounds(narrow, b, inst.space, inst.eps, s.cap, heuristic=False)
    large = boundary_ratio_bounds(wide, b, inst.space, inst.eps, s.cap, heuristic=False)
    if small.defined:
        report.require(at_most(small.ratio_low, large.ratio_low, s.slack), "ratio_low decreased on a larger A")
        report.require(at_most(small.ratio_high, large.ratio_high, s.slack), "ratio_high decreased on a larger A")
    return report


def check_heuristic_containment(inst: Instance, rng: np.random.Generator, s: SuiteSettings) -> CheckReport:
    report = CheckReport(check="heuristic_containment")
    f = _random_table(rng, inst.space)
    exact = bounds_exact(inst.space, f, inst.eps, s.cap)
    found = bounds_heuristic(inst.space, f, inst.eps, s.search)
    report.values.update({"exact_lower": exact.lower, "heuristic_lower": found.lower})
    report.require(at_most(exact.lower, found.lower, s.slack), f"heuristic lower {found.lower!r} < exact {exact.lower!r}")
    report.require(at_most(found.upper, exact.upper, s.slack), f"heuristic upper {found.upper!r} > exact {exact.upper!r}")
    return report


def check_restriction(inst: Instance, rng: np.random.Generator, s: SuiteSettings) -> CheckReport:
    report = CheckReport(check="restriction")
    members = sorted(_random_subset(rng, inst.space.ids, nonempty=True))
    sub = restrict(inst.space, members)
    for i, j in combinations(members, 2):
        report.require(sub.distance(i, j) == inst.space.distance(i, j), f"distance({i}, {j}) changed on restriction")
    report.require(diameter(sub) <= diameter(inst.space), "restriction increased the diameter")
    return report


REGISTRY: List[Tuple[str, Check]] = [
    ("lattice_validity", check_lattice_validity),
    ("algebra", check_algebra),
    ("constant_shift", check_constant_shift),
    ("complement", check_complement),
    ("disjoint_union", check_disjoint_union),
    ("finite_modification", check_finite_modification),
    ("boundary_indicator", check_boundary_indicator),
    ("ratio_monotonicity", check_ratio_monotonicity),
    ("heuristic_containment", check_heuristic_containment),
    ("restriction", check_restriction),
]


@dataclass(frozen=True)
class Failure:
    check: str
    reproducer: str
    messages: Tuple[str, ...]


@dataclass
class VerificationSummary:
    seed: int
    instances: int
    checks_run: int = 0
    failures: List[Failure] = field(default_factory=list)
    inconclusive: List[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class VerificationSuite:
    """Runs every registered invariant over a seeded batch of random instances."""

    def __init__(
        self,
        seed: int = 0,
        instances: Optional[int] = None,
        max_points: Optional[int] = None,
        cap: Optional[int] = None,
        slack: Optional[float] = None,
        search: Optional[SearchConfig] = None,
        registry: Optional[List[Tuple[str, Check]]] = None,
    ):
        config = Config()
        self.seed = seed
        self.instances = config.verify_instances if instances is None else instances
        self.max_points = config.verify_max_points if max_points is None else max_points
        self.settings = SuiteSettings(
            cap=cap,
            slack=config.check_slack if slack is None else slack,
            search=search or SearchConfig(restarts=4, rng_seed=seed),
        )
        self.registry = REGISTRY if registry is None else registry

    def _record(self, summary: VerificationSummary, name: str, reproducer: str, report: CheckReport) -> None:
        summary.checks_run += 1
        if report.status is CheckStatus.FAILED:
            failure = Failure(name, reproducer, tuple(report.violations))
            summary.failures.append(failure)
            logger.error("FAIL %s [%s]: %s", name, reproducer, "; ".join(report.violations))
        elif report.status is CheckStatus.INCONCLUSIVE:
            summary.inconclusive.append(Failure(name, reproducer, tuple(report.notes)))

    def run_instance(self, instance: Instance, summary: VerificationSummary) -> None:
        for stream, (name, check) in enumerate(self.registry):
            try:
                report = check(instance, instance_rng(instance, stream), self.settings)
            except CapExceeded as e:
                report = CheckReport(check=name)
                report.mark_inconclusive(str(e))
            self._record(summary, name, instance.reproducer, report)

    def run_uniform_limit(self, summary: VerificationSummary) -> None:
        grid = uniform_grid(16)
        rng = np.random.default_rng(np.random.SeedSequence(seed_entropy(self.seed), spawn_key=(self.instances, 2)))
        g = _random_table(rng, grid)
        schedule = Schedule(eps0=0.5 / 15, ratio=0.5, steps=3)
        report = uniform_limit_check(grid, Coordinate(0), g, (1, 2, 4, 8, 16), schedule, cap=self.settings.cap)
        self._record(summary, "uniform_limit", f"seed={self.seed} grid=16", report)

    def run(self) -> VerificationSummary:
        summary = VerificationSummary(seed=self.seed, instances=self.instances)
        logger.info(
            "Verifying %d checks on %d instances (seed %d, n <= %d)",
            len(self.registry), self.instances, self.seed, self.max_points,
        )
        for instance in generate_instances(self.seed, self.instances, self.max_points):
            self.run_instance(instance, summary)
        self.run_uniform_limit(summary)
        logger.info(
            "Verification finished: %d checks, %d failures, %d inconclusive",
            summary.checks_run, len(summary.failures), len(summary.inconclusive),
        )
        return summary
