"""
Tests for the seeded instance generator and the invariant suite.
"""

import importlib

import numpy as np
import pytest

# src.means re-exports the function `bounds`, which shadows the submodule attribute
bounds_module = importlib.import_module("src.means.bounds")
from src.exceptions import CapExceeded, PreconditionError
from src.lattice.models import Direction
from src.means import CheckReport
from src.verify import REGISTRY, VerificationSuite, build_instance, generate_instances, instance_rng
from src.verify.suite import check_algebra


def test_instances_rebuild_from_seed_and_index():
    batch = list(generate_instances(5, 4, 9))
    again = build_instance(5, 2, 9)
    assert np.array_equal(batch[2].space.matrix, again.space.matrix)
    assert batch[2].eps == again.eps
    assert batch[2].kind == again.kind
    assert again.reproducer.startswith("seed=5 instance=2 eps=")


def test_instance_sizes_and_eps():
    for inst in generate_instances(11, 40, 6, min_points=2):
        assert 2 <= inst.space.size <= 6
        assert inst.eps > 0
        assert inst.kind in ("cloud", "matrix")


def test_instance_preconditions():
    with pytest.raises(PreconditionError):
        build_instance(0, 0, max_points=3, min_points=4)
    with pytest.raises(PreconditionError):
        build_instance(0, 0, max_points=0)


def test_check_streams_are_independent():
    inst = build_instance(3, 0, 6)
    first = instance_rng(inst, 0).random(4)
    assert np.array_equal(first, instance_rng(inst, 0).random(4))
    assert not np.array_equal(first, instance_rng(inst, 1).random(4))


def test_registry_names_are_unique():
    names = [name for name, _ in REGISTRY]
    assert len(names) == len(set(names)) == 10


def test_small_run_passes():
    summary = VerificationSuite(seed=1, instances=8, max_points=7).run()
    assert summary.passed, [f.messages for f in summary.failures]
    assert summary.checks_run == 8 * len(REGISTRY) + 1


def test_runs_are_deterministic():
    first = VerificationSuite(seed=2, instances=5, max_points=6).run()
    second = VerificationSuite(seed=2, instances=5, max_points=6).run()
    assert first.checks_run == second.checks_run
    assert first.failures == second.failures
    assert first.inconclusive == second.inconclusive


def test_broken_upper_mean_is_caught(monkeypatch):
    def minimizing_both_ways(value, incumbent, direction):
        return incumbent is None or value < incumbent

    monkeypatch.setattr(bounds_module, "_improves", minimizing_both_ways)
    suite = VerificationSuite(seed=0, instances=30, max_points=8, registry=[("algebra", check_algebra)])
    summary = suite.run()
    assert not summary.passed
    messages = [m for f in summary.failures for m in f.messages]
    assert any(m.startswith("l(-f)=") for m in messages)
    assert all(f.check == "algebra" for f in summary.failures)
    assert all(f.reproducer.startswith("seed=0 instance=") for f in summary.failures)


def test_unmutated_improvement_rule():
    assert bounds_module._improves(1.0, None, Direction.MAXIMIZE)
    assert bounds_module._improves(2.0, 1.0, Direction.MAXIMIZE)
    assert not bounds_module._improves(1.0, 1.0, Direction.MAXIMIZE)
    assert not bounds_module._improves(1.0, 1.0, Direction.MINIMIZE)


def test_failures_and_cap_overflows_are_recorded():
    def always_fails(inst, rng, settings):
        report = CheckReport(check="always_fails")
        report.require(False, "boom")
        return report

    def overflows(inst, rng, settings):
        raise CapExceeded(1, 1)

    suite = VerificationSuite(seed=9, instances=2, max_points=4, registry=[("fails", always_fails), ("cap", overflows)])
    summary = suite.run()
    assert summary.checks_run == 5
    assert [f.check for f in summary.failures] == ["fails", "fails"]
    assert summary.failures[0].messages == ("boom",)
    assert summary.failures[1].reproducer.startswith("seed=9 instance=1 ")
    assert [f.check for f in summary.inconclusive] == ["cap", "cap"]


def test_negative_seed_rebuilds_its_unsigned_twin():
    negative, unsigned = build_instance(-1, 3, 7), build_instance(2**64 - 1, 3, 7)
    assert np.array_equal(negative.space.matrix, unsigned.space.matrix)
    assert negative.eps == unsigned.eps
    assert negative.reproducer.startswith("seed=-1 instance=3 ")
    assert VerificationSuite(seed=-4, instances=2, max_points=5).run().passed
