"""
Lower and upper means l_eps(f), u_eps(f) over the eps-lattices of a domain.

bounds_exact() enumerates every lattice; bounds_heuristic() runs the lattice
search in both directions and returns an inner approximation. bounds() picks
the exact path whenever enumeration fits under the cap.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Union

from ..config import Config
from ..exceptions import CapExceeded, PreconditionError
from ..functions.models import FnSpec, bind
from ..lattice.lattices import enumerate_lattices
from ..lattice.models import Direction, Lattice
from ..lattice.search import SearchConfig, extremal_average
from ..logging_config import get_logger
from ..metric.models import Domain
from .models import MeanBounds

logger = get_logger(__name__)


def _improves(value: float, incumbent: Optional[float], direction: Direction) -> bool:
    # strict, so the first lattice in canonical order keeps a tied extremum
    if incumbent is None:
        return True
    if direction is Direction.MINIMIZE:
        return value < incumbent
    return value > incumbent


def _average(values: Sequence[float], locals_: Iterable[int]) -> float:
    total = 0.0
    count = 0
    for k in locals_:
        total += values[k]
        count += 1
    return total / count


def sample_mean(f: FnSpec, members: Union[Lattice, Iterable[int]], domain: Optional[Domain] = None) -> float:
    """Arithmetic mean of f over a point set, summed in ascending id order.

    Args:
        f: Function to average
        members: A Lattice (which carries its domain) or a set of point ids
        domain: Space the ids belong to; required unless members is a Lattice

    Raises:
        PreconditionError: empty set or no domain to evaluate on
    """
    if domain is None and isinstance(members, Lattice):
        domain = members.domain
    if domain is None:
        raise PreconditionError("sample_mean needs the domain the points belong to")
    ids = sorted({int(p) for p in members})
    if not ids:
        raise PreconditionError("sample mean of an empty set")
    total = 0.0
    for pid in ids:
        total += f.evaluate(domain, pid)
    return total / len(ids)


def bounds_exact(
    domain: Domain,
    f: FnSpec,
    eps: float,
    cap: Optional[int] = None,
    tie_tolerance: float = 0.0,
) -> MeanBounds:
    """Exact l_eps(f) and u_eps(f) by full lattice enumeration.

    Witnesses are the first lattices in canonical order that attain each bound.

    Raises:
        CapExceeded: more than `cap` lattices
    """
    values = bind(f, domain)
    lattices = enumerate_lattices(domain, eps, cap, tie_tolerance)

    low = high = None
    witness_low = witness_high = None
    min_size = None
    for lattice in lattices:
        avg = _average(values, (domain.local_index(p) for p in lattice.members))
        if _improves(avg, low, Direction.MINIMIZE):
            low, witness_low = avg, lattice
        if _improves(avg, high, Direction.MAXIMIZE):
            high, witness_high = avg, lattice
        if min_size is None or len(lattice) < min_size:
            min_size = len(lattice)

    logger.debug("Exact bounds at eps=%g over %d lattices: [%r, %r]", eps, len(lattices), low, high)
    return MeanBounds(
        eps=float(eps),
        lower=low,
        upper=high,
        exact=True,
        witness_low=witness_low,
        witness_high=witness_high,
        lattice_count=len(lattices),
        min_lattice_size=min_size,
    )


def bounds_heuristic(
    domain: Domain,
    f: FnSpec,
    eps: float,
    cfg: Optional[SearchConfig] = None,
    tie_tolerance: float = 0.0,
) -> MeanBounds:
    """Inner approximation of [l_eps(f), u_eps(f)] by lattice search.

    The reported lower is >= the true l_eps and the reported upper <= the true
    u_eps. Both searches only visit real lattices, so each witness is usable
    for either side; the pair is ordered so that lower <= upper.
    """
    cfg = cfg or Config().search_config()
    low = extremal_average(domain, eps, f, Direction.MINIMIZE, cfg, tie_tolerance)
    high = extremal_average(domain, eps, f, Direction.MAXIMIZE, cfg, tie_tolerance)
    if high.value < low.value:
        low, high = high, low
    logger.debug(
        "Heuristic bounds at eps=%g: [%r, %r] after %d evaluations",
        eps, low.value, high.value, low.evaluations + high.evaluations,
    )
    return MeanBounds(
        eps=float(eps),
        lower=low.value,
        upper=high.value,
        exact=False,
        witness_low=low.lattice,
        witness_high=high.lattice,
    )


def bounds(
    domain: Domain,
    f: FnSpec,
    eps: float,
    cap: Optional[int] = None,
    cfg: Optional[SearchConfig] = None,
    tie_tolerance: float = 0.0,
) -> MeanBounds:
    """Exact bounds when enumeration fits under the cap, heuristic otherwise."""
    try:
        return bounds_exact(domain, f, eps, cap, tie_tolerance)
    except CapExceeded as e:
        logger.warning("eps=%g: %s, falling back to lattice search", eps, e)
        return bounds_heuristic(domain, f, eps, cfg, tie_tolerance)
