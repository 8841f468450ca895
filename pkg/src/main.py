"""
Main application entry point.

    python -m src.main space-validate SPACE [--tolerance T]
    python -m src.main lattices SPACE --eps E [--cap N]
    python -m src.main sweep SPACE FUNCTION [--eps0 E --ratio R --steps K ...]
    python -m src.main measure SPACE REGION_A REGION_B [--superset REGION ...]
    python -m src.main verify [--seed S --instances N --max-points M]

Tables go to stdout (or --out) as CSV or JSON; logs go to stderr and logs/.

Exit codes: 0 success or verdict reached, 1 validation failure, 2 unreadable
or malformed input, 3 enumeration cap exceeded, 4 precondition violated.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from .config import Config
from .exceptions import CapExceeded, FunctionBindingError, PointIdError, PreconditionError, SpaceDefinitionError
from .functions.documents import load_function_document
from .functions.models import bind
from .lattice.lattices import enumerate_lattices
from .logging_config import get_logger, setup_logging
from .means.models import MeanBounds, Schedule, SweepResult
from .means.sweep import sweep
from .measure.boundary import thin_boundary_verdict
from .measure.regions import load_region_document, resolve_region
from .metric.documents import load_space_document
from .metric.models import Domain
from .metric.space import build_space, diameter, restrict, validate_metric
from .reporting.tables import FORMATS, ResultTable, TableWriter
from .verify.suite import VerificationSuite

# Initialize logging
setup_logging()
logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_PRECONDITION = 4

SWEEP_COLUMNS = ("eps", "lower", "upper", "gap", "exact", "lattice_count", "min_lattice_size")
RATIO_COLUMNS = ("eps", "ratio_low", "ratio_high", "skipped", "exact")


def _load_space(path: str) -> Domain:
    logger.debug("Loading space document %s", path)
    return build_space(load_space_document(path))


def _schedule(args, space: Domain) -> Schedule:
    eps0 = args.eps0
    if eps0 is None:
        eps0 = diameter(space) or 1.0
    return Schedule(eps0=eps0, ratio=args.ratio, steps=args.steps)


def _search_config(args):
    return Config().search_config(
        rng_seed=args.seed,
        restarts=args.restarts,
        max_moves=args.max_moves,
        anneal=args.anneal,
    )


def _bounds_row(b: MeanBounds) -> dict:
    return {
        "eps": b.eps,
        "lower": b.lower,
        "upper": b.upper,
        "gap": b.gap,
        "exact": b.exact,
        "lattice_count": b.lattice_count,
        "min_lattice_size": b.min_lattice_size,
    }


def _sweep_table(title: str, result: SweepResult, estimate_key: str = "estimate") -> ResultTable:
    table = ResultTable(title=title, columns=SWEEP_COLUMNS)
    for step in result.trail:
        table.add_row(**_bounds_row(step))
    table.summary = {"verdict": result.verdict, estimate_key: result.mean_estimate}
    return table


def cmd_space_validate(args) -> int:
    """Validate the metric axioms of a space document; exit 1 on any violation."""
    space = _load_space(args.space)
    report = validate_metric(space, args.tolerance)
    table = ResultTable(title="violations", columns=("kind", "points", "amount"))
    for v in report.violations + report.warnings:
        table.add_row(kind=v.kind, points=list(v.points), amount=v.amount)
    table.summary = {
        "verdict": "valid" if report.is_valid else "invalid",
        "points": space.size,
        "violations": len(report.violations),
        "warnings": len(report.warnings),
    }
    TableWriter(args.format, args.out).write([table])
    return EXIT_OK if report.is_valid else EXIT_INVALID


def cmd_lattices(args) -> int:
    """List every eps-lattice in canonical order."""
    space = _load_space(args.space)
    try:
        lattices = enumerate_lattices(space, args.eps, args.cap)
    except CapExceeded as e:
        print(f"CapExceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    table = ResultTable(title="lattices", columns=("index", "size", "members"))
    for i, lattice in enumerate(lattices):
        table.add_row(index=i, size=len(lattice), members=list(lattice.members))
    table.summary = {"count": len(lattices)}
    TableWriter(args.format, args.out).write([table])
    return EXIT_OK


def cmd_sweep(args) -> int:
    """Bounds of a function along an eps schedule plus the mean verdict."""
    space = _load_space(args.space)
    f = load_function_document(args.function)
    bind(f, space)
    result = sweep(
        space,
        f,
        _schedule(args, space),
        tol_gap=args.tol_gap,
        tol_drift=args.tol_drift,
        stable_steps=args.stable_steps,
        cap=args.cap,
        cfg=_search_config(args),
        persistent_gap=args.gap_floor,
    )
    TableWriter(args.format, args.out).write([_sweep_table("sweep", result)])
    return EXIT_OK


def cmd_measure(args) -> int:
    """(A|B) over the subspace B, and thin-boundary ratios over each superset K."""
    space = _load_space(args.space)
    a = resolve_region(load_region_document(args.region_a), space)
    b = resolve_region(load_region_document(args.region_b), space)
    supersets: List[Domain] = [space]
    for path in args.superset or []:
        supersets.append(restrict(space, resolve_region(load_region_document(path), space)))

    schedule = _schedule(args, space)
    result = thin_boundary_verdict(
        a, b, supersets, schedule,
        tol=args.tol_gap if args.tol_gap is not None else Config().tol_gap,
        cap=args.cap,
        cfg=_search_config(args),
        stable_steps=args.stable_steps,
    )

    tables = [_sweep_table("relative_measure", result.relative.trail, estimate_key="value")]
    for i, trail in enumerate(result.supersets):
        table = ResultTable(title=f"thin_boundary K{i} ({trail.superset_size} points)", columns=RATIO_COLUMNS)
        for r in trail.trail:
            table.add_row(eps=r.eps, ratio_low=r.ratio_low, ratio_high=r.ratio_high, skipped=r.skipped, exact=r.exact)
        table.summary = {"verdict": trail.verdict, "estimate": trail.estimate}
        tables.append(table)
    summary = ResultTable(title="summary", columns=("quantity", "verdict", "value"))
    summary.add_row(quantity="relative_measure", verdict=result.relative.verdict, value=result.relative.value)
    summary.add_row(quantity="thin_boundary", verdict=result.verdict, value=result.value)
    tables.append(summary)
    for note in result.notes:
        logger.warning(note)

    TableWriter(args.format, args.out).write(tables)
    return EXIT_OK


def cmd_verify(args) -> int:
    """Run the invariant registry over seeded random instances."""
    suite = VerificationSuite(
        seed=args.seed if args.seed is not None else Config().search_seed,
        instances=args.instances,
        max_points=args.max_points,
        cap=args.cap,
    )
    summary = suite.run()
    table = ResultTable(title="failures", columns=("check", "reproducer", "message"))
    for failure in summary.failures:
        table.add_row(check=failure.check, reproducer=failure.reproducer, message="; ".join(failure.messages))
    table.summary = {
        "verdict": "passed" if summary.passed else "failed",
        "checks": summary.checks_run,
        "failures": len(summary.failures),
        "inconclusive": len(summary.inconclusive),
    }
    TableWriter(args.format, args.out).write([table])
    return EXIT_OK if summary.passed else EXIT_INVALID


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m src.main",
        description="Means of functions over finite metric spaces via extremal averages over eps-lattices.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default="csv", help='Output format (default: csv).')
    common.add_argument('--out', help='Write the table to this file instead of standard output.')
    common.add_argument('--cap', type=_positive_int, help='Lattice enumeration cap (default: LATTICE_ENUM_CAP).')

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument('--seed', type=int, help='Seed for the lattice search (default: SEARCH_SEED).')
    search.add_argument('--restarts', type=_positive_int, help='Search restarts per bound.')
    search.add_argument('--max-moves', type=_positive_int, help='Moves per restart (default: 10 per point).')
    search.add_argument('--anneal', action='store_true', default=None, help='Accept worse moves by simulated annealing.')

    schedule = argparse.ArgumentParser(add_help=False)
    schedule.add_argument('--eps0', type=_positive_float, help='First eps of the schedule (default: the diameter).')
    schedule.add_argument('--ratio', type=float, default=0.5, help='Geometric ratio in (0, 1) (default: 0.5).')
    schedule.add_argument('--steps', type=_positive_int, default=8, help='Number of eps values (default: 8).')
    schedule.add_argument('--tol-gap', type=float, help='Largest gap counted as settled (default: SWEEP_TOL_GAP).')
    schedule.add_argument('--tol-drift', type=float, help='Largest midpoint drift between settled steps.')
    schedule.add_argument('--stable-steps', type=_positive_int, help='Trailing steps the verdict looks at.')
    schedule.add_argument('--gap-floor', type=float, help='Smallest exact gap that counts as persistent (NoMean).')

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser('space-validate', parents=[common], help='Check the metric axioms of a space document.')
    p.add_argument('space')
    p.add_argument('--tolerance', type=float, default=0.0, help='Slack allowed on every axiom (default: 0).')
    p.set_defaults(handler=cmd_space_validate)

    p = sub.add_parser('lattices', parents=[common], help='List all eps-lattices of a space.')
    p.add_argument('space')
    p.add_argument('--eps', type=_positive_float, required=True)
    p.set_defaults(handler=cmd_lattices)

    p = sub.add_parser('sweep', parents=[common, search, schedule], help='Decide whether a function has a mean.')
    p.add_argument('space')
    p.add_argument('function')
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser('measure', parents=[common, search, schedule], help='Relative measure and thin boundary of A in B.')
    p.add_argument('space')
    p.add_argument('region_a')
    p.add_argument('region_b')
    p.add_argument('--superset', action='append', help='Region of the space to use as an extra superset K (repeatable).')
    p.set_defaults(handler=cmd_measure)

    p = sub.add_parser('verify', parents=[common], help='Run the invariant suite on random instances.')
    p.add_argument('--seed', type=int, help='Seed of the instance generator.')
    p.add_argument('--instances', type=_positive_int, help='Number of random instances (default: VERIFY_INSTANCES).')
    p.add_argument('--max-points', type=_positive_int, help='Largest instance size (default: VERIFY_MAX_POINTS).')
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    config = Config()
    logger.debug("Effective configuration: %s", config.to_dict())

    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        return args.handler(args)
    except (OSError, json.JSONDecodeError, ValidationError, SpaceDefinitionError, FunctionBindingError) as e:
        logger.error("Cannot use input: %s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as e:
        logger.error("Enumeration cap exceeded: %s", e)
        print(f"CapExceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except (PreconditionError, PointIdError) as e:
        logger.error("Precondition violated: %s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    finally:
        logging.shutdown()


if __name__ == "__main__":
    sys.exit(main())
