"""
Tests for sample means, lower/upper mean bounds and the mean identity checks.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.exceptions import CapExceeded, PreconditionError
from src.functions import Constant, Coordinate, Table, indicator
from src.lattice import SearchConfig, enumerate_lattices
from src.means import (
    CheckStatus,
    Schedule,
    algebra_check,
    bounds,
    bounds_exact,
    bounds_heuristic,
    finite_modification_check,
    linearity_check,
    sample_mean,
    shift_check,
    uniform_limit_check,
)
from src.means.checks import at_most, close
from src.metric import space_from_coords
from src.verify import build_instance

from .oracle import oracle_bounds


def test_sample_mean_examples(e5):
    assert sample_mean(Coordinate(0), {0, 2, 4}, e5) == 0.5
    assert sample_mean(Constant(-2.0), [1, 3], e5) == -2.0
    assert sample_mean(indicator({0, 1, 2}), {1, 4}, e5) == 0.5
    lattice = enumerate_lattices(e5, 0.3)[1]
    assert sample_mean(Coordinate(0), lattice) == 0.375


def test_sample_mean_preconditions(e5):
    with pytest.raises(PreconditionError):
        sample_mean(Coordinate(0), set(), e5)
    with pytest.raises(PreconditionError):
        sample_mean(Coordinate(0), {0, 1})


def test_exact_bounds_on_e5(e5):
    b = bounds_exact(e5, Coordinate(0), 0.3)
    assert (b.lower, b.upper) == (0.375, 0.625)
    assert b.exact
    assert b.lattice_count == 4
    assert b.min_lattice_size == 2
    assert b.witness_low.members == (0, 3)
    assert b.witness_high.members == (1, 4)

    whole = bounds_exact(e5, Coordinate(0), 0.2)
    assert whole.lower == whole.upper == 0.5
    assert whole.lattice_count == 1


def test_exact_bounds_pick_first_witness(e5):
    b = bounds_exact(e5, indicator({0, 1, 2}), 0.3)
    assert b.lower == 0.5
    assert b.upper == 2 / 3
    assert b.witness_low.members == (0, 3)
    assert b.witness_high.members == (0, 2, 4)


def test_heuristic_bounds_on_e5(e5):
    b = bounds_heuristic(e5, Coordinate(0), 0.3)
    assert (b.lower, b.upper) == (0.375, 0.625)
    assert not b.exact
    assert b.lattice_count is None
    assert bounds_heuristic(e5, Constant(4.0), 0.3).gap == 0.0


def test_heuristic_bounds_are_deterministic(grid64):
    cfg = SearchConfig(restarts=2, rng_seed=9)
    assert bounds_heuristic(grid64, Coordinate(0), 0.1, cfg) == bounds_heuristic(grid64, Coordinate(0), 0.1, cfg)


def test_bounds_fall_back_to_search(grid64, cheap_search):
    with pytest.raises(CapExceeded):
        bounds_exact(grid64, Coordinate(0), 0.05, cap=50)
    b = bounds(grid64, Coordinate(0), 0.05, cap=50, cfg=cheap_search)
    assert not b.exact
    assert 0.0 <= b.lower <= b.upper <= 1.0
    assert bounds(grid64, Coordinate(0), 0.01, cap=50).exact


@given(st.integers(0, 10_000))
@settings(max_examples=100, deadline=None)
def test_exact_bounds_match_oracle(index):
    instance = build_instance(seed=31, index=index, max_points=10)
    space = instance.space
    f = Table({pid: ((pid * 37) % 11) - 5.0 for pid in space.ids})
    low, high = oracle_bounds(space, f, instance.eps)
    b = bounds_exact(space, f, instance.eps)
    assert b.lower == pytest.approx(low, abs=1e-12)
    assert b.upper == pytest.approx(high, abs=1e-12)


def test_slack_helpers():
    assert close(1e6, 1e6 + 1e-7, 1e-12)
    assert not close(0.0, 1e-9, 1e-12)
    assert at_most(1.0 + 1e-13, 1.0, 1e-12)
    assert not at_most(1.1, 1.0, 1e-12)


def test_algebra_examples(e5):
    x = Coordinate(0)
    report = algebra_check(e5, x, Constant(1.0), -1.0, 2.0, 0.3)
    assert report.passed, report.violations
    assert report.values["l(-f)"] == -0.625
    assert report.values["u(-f)"] == -0.375
    assert report.values["l(f+g)"] == 1.375
    assert report.values["u(f+g)"] == 1.625
    assert algebra_check(e5, x, x, 0.0, 0.0, 0.3).passed


@given(
    st.lists(st.floats(-10, 10, allow_nan=False), min_size=5, max_size=5),
    st.lists(st.floats(-10, 10, allow_nan=False), min_size=5, max_size=5),
    st.floats(-3, 3, allow_nan=False),
    st.floats(0, 3, allow_nan=False),
    st.sampled_from([0.2, 0.3, 0.6, 2.0]),
)
@settings(max_examples=60, deadline=None)
def test_algebra_holds_for_arbitrary_tables(fv, gv, alpha, beta, eps):
    e5 = space_from_coords([[0.0], [0.25], [0.5], [0.75], [1.0]])
    report = algebra_check(e5, Table(dict(enumerate(fv))), Table(dict(enumerate(gv))), alpha, beta, eps, slack=1e-9)
    assert report.passed, report.violations


def test_shift_check(e5):
    report = shift_check(e5, Coordinate(0), 3.0, 0.3)
    assert report.passed
    assert report.values["l(f+c)"] == 3.375


def test_finite_modification_example(e5):
    report = finite_modification_check(e5, Coordinate(0), [2], [1.0], 0.3)
    assert report.passed
    assert report.values["bound"] == 0.5
    assert report.values["shift_upper"] <= 1 / 3


def test_finite_modification_zero_and_edgeless(e5):
    zero = finite_modification_check(e5, Coordinate(0), [1, 3], [0.0, 0.0], 0.3)
    assert zero.values["shift_lower"] == zero.values["shift_upper"] == 0.0
    single = finite_modification_check(e5, Coordinate(0), [4], [0.5], 0.2)
    assert single.values["shift_lower"] == pytest.approx(0.1, abs=1e-15)


def test_finite_modification_preconditions(e5):
    with pytest.raises(PreconditionError):
        finite_modification_check(e5, Coordinate(0), [1, 1], [0.5, 0.5], 0.3)
    with pytest.raises(PreconditionError):
        finite_modification_check(e5, Coordinate(0), [1], [], 0.3)


def test_linearity_check(grid64):
    schedule = Schedule(eps0=0.01, ratio=0.5, steps=3)
    report = linearity_check(grid64, Coordinate(0), Constant(2.0), 3.0, -1.0, schedule)
    assert report.passed
    assert report.values["expected"] == pytest.approx(-0.5, abs=1e-12)


def test_linearity_inconclusive_without_means(interleaved17, first_class):
    schedule = Schedule(eps0=0.125, ratio=0.9, steps=3)
    report = linearity_check(interleaved17, indicator(first_class), Coordinate(0), 1.0, 1.0, schedule)
    assert report.status is CheckStatus.INCONCLUSIVE


def test_uniform_limit_check(grid64):
    g = Table({pid: (-1.0) ** pid for pid in grid64.ids})
    schedule = Schedule(eps0=0.01, ratio=0.5, steps=3)
    report = uniform_limit_check(grid64, Coordinate(0), g, (1, 2, 4, 8, 16), schedule)
    assert report.passed
    assert report.values["f_hat"] == pytest.approx(0.5, abs=1e-9)
    with pytest.raises(PreconditionError):
        uniform_limit_check(grid64, Coordinate(0), g, (0,), schedule)
