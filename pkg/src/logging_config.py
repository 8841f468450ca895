"""
Centralized logging configuration for the lattice-mean engines and CLI.

Every module obtains its logger through get_logger(__name__); setup_logging()
installs one dictConfig profile for the whole process.

Logging Levels (from most to least verbose):
    SUPER_DEBUG (5): Intensive troubleshooting
        - Per-move traces of the lattice local search
        - Full lattice listings
        Usage: logger.super_debug("restart %d move %d value %.17g", r, m, value)

    DEBUG (10): Detailed debugging information
        - Conflict graph sizes, enumeration counts per eps
        - Exact/heuristic path decisions
        Usage: logger.debug("Enumerated %d lattices at eps=%g", count, eps)

    INFO (20): General operational events
        - Sweep steps and verdicts
        - Verification suite summaries
        Usage: logger.info("Sweep verdict %s after %d steps", verdict, steps)

    WARNING (30): Unexpected but handled situations
        - Enumeration cap exceeded, heuristic path used
        - Pseudo-metric inputs
        Usage: logger.warning("Cap %d exceeded at eps=%g", cap, eps)

    ERROR (40): Failed operations that need attention
        - Unreadable documents
        - Invariant failures in the verification suite
        Usage: logger.error("Check %s failed: %s", name, detail)

    CRITICAL (50): Unhandled exceptions at the CLI boundary

Environment-Specific Logging:
    Development:
        - Console: DEBUG and above
        - File: INFO and above
        - Debug file: DEBUG and above
        - Error file: ERROR and above

    Production:
        - Console: WARNING and above
        - File: INFO and above

    Test:
        - Console: INFO and above
        - File (logs/test.log): DEBUG and above

The console handler writes to stderr: stdout carries the CSV/JSON tables and
has to stay byte-identical between runs.

Log File Structure:
    - logs/app.log: Main application log (INFO and above)
    - logs/debug/debug.log: Detailed debug information
    - logs/error.log: Error and critical messages
    - logs/troubleshoot/troubleshoot.log: Intensive troubleshooting data
    - logs/test.log: Test-specific logs (in test environment)

Note: All log files are rotated at 10MB with 5 backup files.
"""

import os
import logging
import logging.config
from pathlib import Path
from typing import Dict, Any, Optional

# Base paths
BASE_DIR = Path(__file__).parent.parent
LOGS_DIR = Path(os.getenv("LOGS_DIR", str(BASE_DIR / "logs")))
DEBUG_DIR = LOGS_DIR / "debug"
TROUBLESHOOT_DIR = LOGS_DIR / "troubleshoot"

COMPONENT_LOGGERS = ["src.metric", "src.lattice", "src.means", "src.measure", "src.verify"]

# Custom log level for intensive troubleshooting
SUPER_DEBUG = 5
logging.addLevelName(SUPER_DEBUG, "SUPER_DEBUG")


def super_debug(self, message, *args, **kwargs):
    """
    Log a message with SUPER_DEBUG level.

    Added to the Logger class; only emits when the logger has been switched to
    SUPER_DEBUG through enable_troubleshoot_logging().
    """
    if self.isEnabledFor(SUPER_DEBUG):
        self._log(SUPER_DEBUG, message, args, **kwargs)


logging.Logger.super_debug = super_debug


def _rotating(level: str, formatter: str, filename: Path) -> Dict[str, Any]:
    return {
        "class": "logging.handlers.RotatingFileHandler",
        "level": level,
        "formatter": formatter,
        "filename": str(filename),
        "maxBytes": 10485760,  # 10MB
        "backupCount": 5,
        "delay": True,
    }


def get_logging_config(env: str = "development") -> Dict[str, Any]:
    """
    Get logging configuration based on environment.

    Args:
        env: Environment name ('development', 'production', 'test')

    Returns:
        Dict suitable for logging.config.dictConfig()
    """
    config = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {
                "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
            },
            "detailed": {
                "format": "%(asctime)s [%(levelname)s] %(name)s:%(filename)s:%(lineno)d: %(message)s"
            },
            "troubleshoot": {
                "format": "%(asctime)s [%(levelname)s] %(name)s:%(filename)s:%(lineno)d:%(funcName)s: %(message)s"
            }
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "level": "INFO",
                "formatter": "standard",
                "stream": "ext://sys.stderr"
            },
            "file": _rotating("INFO", "detailed", LOGS_DIR / "app.log"),
            "debug_file": _rotating("DEBUG", "detailed", DEBUG_DIR / "debug.log"),
            "error_file": _rotating("ERROR", "detailed", LOGS_DIR / "error.log"),
            "troubleshoot_file": _rotating("SUPER_DEBUG", "troubleshoot", TROUBLESHOOT_DIR / "troubleshoot.log"),
        },
        "loggers": {
            "": {  # Root logger
                "handlers": ["console", "file", "error_file"],
                "level": "INFO",
                "propagate": True
            },
            "troubleshoot": {
                "handlers": ["troubleshoot_file"],
                "level": "SUPER_DEBUG",
                "propagate": False
            },
        }
    }

    for name in COMPONENT_LOGGERS:
        config["loggers"][name] = {
            "handlers": ["console", "file", "error_file"],
            "level": "INFO",
            "propagate": False
        }

    if env == "development":
        config["handlers"]["console"]["level"] = "DEBUG"
        config["loggers"][""]["level"] = "DEBUG"
        config["loggers"][""]["handlers"].append("debug_file")
        # components do not propagate, so they need the debug handler themselves
        for name in COMPONENT_LOGGERS:
            config["loggers"][name]["level"] = "DEBUG"
            config["loggers"][name]["handlers"].append("debug_file")
    elif env == "production":
        config["handlers"]["console"]["level"] = "WARNING"
    elif env == "test":
        config["handlers"]["console"]["level"] = "INFO"
        config["loggers"][""]["level"] = "DEBUG"
        config["handlers"]["file"] = _rotating("DEBUG", "detailed", LOGS_DIR / "test.log")
        for name in COMPONENT_LOGGERS:
            config["loggers"][name]["level"] = "DEBUG"
    else:
        raise ValueError(f"Unknown logging environment: {env}")

    return config


def setup_logging(env: Optional[str] = None) -> None:
    """
    Set up logging configuration for the process.

    Args:
        env: Environment name ('development', 'production', 'test').
             If None, uses the LOG_ENV environment variable or 'development'.
    """
    if env is None:
        env = os.getenv("LOG_ENV", "development")

    for directory in (LOGS_DIR, DEBUG_DIR, TROUBLESHOOT_DIR):
        directory.mkdir(parents=True, exist_ok=True)

    logging.config.dictConfig(get_logging_config(env))

    logger = logging.getLogger(__name__)
    logger.debug("Logging configured for environment: %s", env)


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance with the specified name (typically __name__).
    """
    return logging.getLogger(name)


def enable_troubleshoot_logging(component: Optional[str] = None) -> None:
    """
    Enable SUPER_DEBUG level logging for one component or globally.

    Args:
        component: 'metric', 'lattice', 'means', 'measure' or 'verify'.
                   If None, enables the dedicated troubleshoot logger.
    """
    if component:
        logger = logging.getLogger(f"src.{component}")
    else:
        logger = logging.getLogger("troubleshoot")

    logger.setLevel(SUPER_DEBUG)
    logger.super_debug("Troubleshoot logging enabled")


def disable_troubleshoot_logging(component: Optional[str] = None) -> None:
    """
    Disable SUPER_DEBUG level logging again.
    """
    if component:
        logger = logging.getLogger(f"src.{component}")
    else:
        logger = logging.getLogger("troubleshoot")
    logger.setLevel(logging.INFO)
