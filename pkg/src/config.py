"""
Configuration Management Module

Handles loading and managing configuration settings from:
- Environment variables (.env)
- Command line arguments (the CLI overrides individual values)

Provides centralized access to engine defaults: enumeration cap, search
parameters, sweep tolerances and the verification suite size.
"""

import os
from typing import Dict, Any

from dotenv import load_dotenv

from .logging_config import get_logger

logger = get_logger(__name__)


class Config:
    """Engine configuration.

    Implements the Singleton pattern so every engine sees the same defaults.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return

        load_dotenv()

        logger.debug("Initializing Config...")

        # Enumeration
        self.enum_cap = self._get_int("LATTICE_ENUM_CAP", 1_000_000)

        # Local search
        self.search_restarts = self._get_int("SEARCH_RESTARTS", 16)
        self.search_seed = self._get_int("SEARCH_SEED", 0)
        self.search_anneal = os.getenv("SEARCH_ANNEAL", "false").lower() == "true"
        self.search_temperature = self._get_float("SEARCH_TEMPERATURE", 1.0)
        self.search_cooling = self._get_float("SEARCH_COOLING", 0.95)

        # Sweep
        self.tol_gap = self._get_float("SWEEP_TOL_GAP", 1e-9)
        self.tol_drift = self._get_float("SWEEP_TOL_DRIFT", 1e-9)
        self.stable_steps = self._get_int("SWEEP_STABLE_STEPS", 3)
        self.gap_floor = self._get_float("SWEEP_GAP_FLOOR", 0.1)

        # Fixed-eps checks
        self.check_slack = self._get_float("CHECK_SLACK", 1e-12)

        # Verification suite
        self.verify_instances = self._get_int("VERIFY_INSTANCES", 200)
        self.verify_max_points = self._get_int("VERIFY_MAX_POINTS", 14)

        logger.debug("Configuration initialized: %s", self.to_dict())
        self._initialized = True

    @staticmethod
    def _get_int(env_var: str, default: int) -> int:
        raw = os.getenv(env_var)
        if raw is None or not raw.strip():
            return default
        try:
            return int(raw)
        except ValueError:
            logger.error("Invalid integer for %s: %r, using %d", env_var, raw, default)
            return default

    @staticmethod
    def _get_float(env_var: str, default: float) -> float:
        raw = os.getenv(env_var)
        if raw is None or not raw.strip():
            return default
        try:
            return float(raw)
        except ValueError:
            logger.error("Invalid number for %s: %r, using %g", env_var, raw, default)
            return default

    def search_config(self, **overrides):
        """Build a SearchConfig from the configured defaults.

        Keyword overrides replace individual fields (e.g. rng_seed=7).
        """
        from .lattice.search import SearchConfig

        values = {
            "restarts": self.search_restarts,
            "rng_seed": self.search_seed,
            "anneal": self.search_anneal,
            "initial_temperature": self.search_temperature,
            "cooling": self.search_cooling,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return SearchConfig(**values)

    @classmethod
    def reset(cls) -> None:
        """Forget the singleton so the next Config() re-reads the environment."""
        cls._instance = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary for logging."""
        return {
            "enum_cap": self.enum_cap,
            "search_restarts": self.search_restarts,
            "search_seed": self.search_seed,
            "search_anneal": self.search_anneal,
            "search_temperature": self.search_temperature,
            "search_cooling": self.search_cooling,
            "tol_gap": self.tol_gap,
            "tol_drift": self.tol_drift,
            "stable_steps": self.stable_steps,
            "gap_floor": self.gap_floor,
            "check_slack": self.check_slack,
            "verify_instances": self.verify_instances,
            "verify_max_points": self.verify_max_points,
        }
