"""
Exception hierarchy for the lattice-mean engines.

Metric-axiom violations are reported as data (see ValidationReport), everything
here is raised for inputs the engines cannot work with.
"""

from typing import Optional


class LatticeMeanError(Exception):
    """Base class for all errors raised by this package."""


class SpaceDefinitionError(LatticeMeanError, ValueError):
    """A space description cannot be turned into a metric space."""


class PointIdError(LatticeMeanError, IndexError):
    """A point id is out of range or foreign to the domain it is used with."""


class FunctionBindingError(LatticeMeanError, ValueError):
    """A function cannot be evaluated on every point of its target domain."""


class PreconditionError(LatticeMeanError, ValueError):
    """An operation was called with arguments outside its precondition."""


class CapExceeded(LatticeMeanError):
    """Exact enumeration would produce more results than the configured cap.

    Attributes:
        cap: The cap that was in force
        count: How many results had been produced when enumeration stopped
        total: How many results exist, when they were counted up front
    """

    def __init__(self, cap: int, count: int, what: str = "lattices", total: Optional[int] = None):
        self.cap = cap
        self.count = count
        self.what = what
        self.total = total
        if total is None:
            super().__init__(f"more than {cap} {what} (stopped after {count})")
        else:
            super().__init__(f"more than {cap} {what} ({total} counted, none listed)")
