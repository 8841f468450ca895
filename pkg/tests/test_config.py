"""
Tests for environment-driven configuration and the logging profiles.
"""

import pytest

from src.config import Config
from src.logging_config import COMPONENT_LOGGERS, get_logging_config


def test_defaults(fresh_config):
    for var in ("LATTICE_ENUM_CAP", "SEARCH_RESTARTS", "SWEEP_GAP_FLOOR", "SWEEP_STABLE_STEPS"):
        fresh_config.delenv(var, raising=False)
    config = Config()
    assert config.enum_cap == 1_000_000
    assert config.search_restarts == 16
    assert config.gap_floor == 0.1
    assert config.stable_steps == 3
    assert Config() is config


def test_environment_overrides(fresh_config):
    fresh_config.setenv("LATTICE_ENUM_CAP", "500")
    fresh_config.setenv("SWEEP_TOL_GAP", "1e-6")
    fresh_config.setenv("SEARCH_ANNEAL", "true")
    config = Config()
    assert config.enum_cap == 500
    assert config.tol_gap == 1e-6
    assert config.search_anneal is True


def test_malformed_values_fall_back(fresh_config):
    fresh_config.setenv("SEARCH_RESTARTS", "many")
    fresh_config.setenv("CHECK_SLACK", "")
    config = Config()
    assert config.search_restarts == 16
    assert config.check_slack == 1e-12


def test_search_config_overrides(fresh_config):
    fresh_config.setenv("SEARCH_SEED", "11")
    cfg = Config().search_config(restarts=3, max_moves=None)
    assert cfg.rng_seed == 11
    assert cfg.restarts == 3
    assert cfg.max_moves is None


def test_to_dict_lists_every_setting(fresh_config):
    settings = Config().to_dict()
    assert settings["verify_instances"] == Config().verify_instances
    assert set(settings) >= {"enum_cap", "tol_gap", "tol_drift", "gap_floor", "check_slack"}


@pytest.mark.parametrize("env, level", [("development", "DEBUG"), ("production", "WARNING"), ("test", "INFO")])
def test_logging_profiles(env, level):
    config = get_logging_config(env)
    assert config["handlers"]["console"]["level"] == level
    assert config["handlers"]["console"]["stream"] == "ext://sys.stderr"
    for name in COMPONENT_LOGGERS:
        assert name in config["loggers"]


def test_unknown_logging_profile():
    with pytest.raises(ValueError):
        get_logging_config("staging")
