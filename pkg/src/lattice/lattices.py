"""
eps-dispersions and eps-lattices.

A lattice is read as a maximal eps-dispersion: the set itself is a dispersion
and no single domain point can be added to it. Supersets of non-dispersions are
never dispersions, so single-point maximality is enough.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..config import Config
from ..exceptions import CapExceeded, PreconditionError
from ..logging_config import get_logger
from ..metric.models import Domain
from .conflict import conflict_graph, subset_mask
from .models import ConflictGraph, Lattice, iter_bits, seed_entropy

logger = get_logger(__name__)


def _check_eps(eps: float) -> None:
    if not eps > 0:
        raise PreconditionError(f"eps must be positive, got {eps}")


def is_dispersion(domain: Domain, subset: Iterable[int], eps: float, tie_tolerance: float = 0.0) -> bool:
    """True iff all pairwise distances within subset are >= eps."""
    _check_eps(eps)
    members = sorted(set(subset))
    subset_mask(domain, members)
    threshold = eps + tie_tolerance
    for i, j in combinations(members, 2):
        if domain.distance(i, j) < threshold or domain.distance(j, i) < threshold:
            return False
    return True


def is_lattice(domain: Domain, subset: Iterable[int], eps: float, tie_tolerance: float = 0.0) -> bool:
    """True iff subset is an eps-dispersion that no domain point extends."""
    members = sorted(set(subset))
    if not is_dispersion(domain, members, eps, tie_tolerance):
        return False
    threshold = eps + tie_tolerance
    chosen = set(members)
    for pid in domain.ids:
        if pid in chosen:
            continue
        if all(domain.distance(pid, s) >= threshold and domain.distance(s, pid) >= threshold for s in members):
            return False
    return True


def iter_lattices(graph: ConflictGraph) -> Iterator[int]:
    """Yield every maximal independent set of the conflict graph as a bitmask.

    Bron–Kerbosch with pivoting, run on the complement (compatibility) graph:
    maximal cliques there are maximal independent sets here. Each set is
    produced exactly once, in no particular order.
    """
    full = graph.full_mask
    compat = [full & ~row & ~(1 << k) for k, row in enumerate(graph.adjacency)]

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        # pivot: the vertex of P ∪ X covering most of P
        pivot, best = -1, -1
        for u in iter_bits(p | x):
            cover = (p & compat[u]).bit_count()
            if cover > best:
                pivot, best = u, cover
        for v in iter_bits(p & ~compat[pivot]):
            bit = 1 << v
            yield from expand(r | bit, p & compat[v], x & compat[v])
            p &= ~bit
            x |= bit

    if graph.n == 0:
        return
    yield from expand(0, full, 0)


COUNT_STATE_BUDGET = 100_000


def _count_maximal(graph: ConflictGraph, budget: int) -> int:
    """Number of maximal independent sets, by a forward sweep over local indices.

    A state is (later points adjacent to a chosen point, skipped points not
    yet adjacent to any chosen point). A skipped point whose neighbours all lie
    behind the sweep can no longer be covered, so its state is dropped.
    """
    n = graph.n
    if n == 0:
        return 0
    adjacency = graph.adjacency
    full = graph.full_mask
    last = [row.bit_length() - 1 for row in adjacency]
    settled = 0
    states = {(0, 0): 1}
    for i in range(n):
        bit = 1 << i
        later = full & ~((bit << 1) - 1)
        for p in range(n):
            if last[p] <= i:
                settled |= 1 << p
        step = {}
        for (dom, pend), ways in states.items():
            if not dom & bit:
                key = ((dom | adjacency[i]) & later, pend & ~adjacency[i])
                if not key[1] & settled:
                    step[key] = step.get(key, 0) + ways
                skipped = pend | bit
            else:
                skipped = pend
            if not skipped & settled:
                key = (dom & later, skipped)
                step[key] = step.get(key, 0) + ways
        if len(step) > budget:
            raise CapExceeded(budget, len(step), what="count states")
        states = step
    return sum(ways for (_, pend), ways in states.items() if not pend)


def count_lattices(
    domain: Domain,
    eps: float,
    state_budget: Optional[int] = None,
    tie_tolerance: float = 0.0,
) -> int:
    """How many eps-lattices the domain has, without listing them.

    Raises:
        CapExceeded: the sweep needed more than `state_budget` states at one point
    """
    budget = COUNT_STATE_BUDGET if state_budget is None else state_budget
    graph = conflict_graph(domain, eps, tie_tolerance)
    return _count_maximal(graph, budget)


def enumerate_lattices(
    domain: Domain,
    eps: float,
    cap: Optional[int] = None,
    tie_tolerance: float = 0.0,
) -> List[Lattice]:
    """All eps-lattices of the domain in canonical order (sorted member lists).

    The lattices are counted first when that is cheap, so an oversized
    family fails before any of it is listed.

    Raises:
        CapExceeded: more than `cap` lattices exist
    """
    cap = Config().enum_cap if cap is None else cap
    if cap < 1:
        raise PreconditionError("cap must be positive")
    graph = conflict_graph(domain, eps, tie_tolerance)
    try:
        total = _count_maximal(graph, COUNT_STATE_BUDGET)
    except CapExceeded:
        total = None
    if total is not None and total > cap:
        logger.warning("Lattice enumeration at eps=%g skipped: %d lattices exceed cap %d", eps, total, cap)
        raise CapExceeded(cap, 0, total=total)
    found: List[Tuple[int, ...]] = []
    for mask in iter_lattices(graph):
        if len(found) >= cap:
            logger.warning("Lattice enumeration at eps=%g exceeded cap %d", eps, cap)
            raise CapExceeded(cap, len(found))
        found.append(graph.members_of(mask))
    found.sort()
    logger.debug("Enumerated %d lattices at eps=%g", len(found), eps)
    return [Lattice(members=m, eps=float(eps), domain=domain) for m in found]


class LatticeCache:
    """Enumerations keyed by (domain, eps, cap, tie tolerance), overflows included.

    Holds a reference to every domain it has seen, so identity keys stay valid
    for the cache's lifetime.
    """

    def __init__(self) -> None:
        self._entries: Dict[tuple, Union[List[Lattice], CapExceeded]] = {}
        self._domains: Dict[int, Domain] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def lattices(
        self,
        domain: Domain,
        eps: float,
        cap: Optional[int] = None,
        tie_tolerance: float = 0.0,
    ) -> List[Lattice]:
        cap = Config().enum_cap if cap is None else cap
        key = (id(domain), float(eps), cap, float(tie_tolerance))
        entry = self._entries.get(key)
        if entry is None:
            self._domains[id(domain)] = domain
            try:
                entry = enumerate_lattices(domain, eps, cap, tie_tolerance)
            except CapExceeded as e:
                entry = e
            self._entries[key] = entry
        else:
            logger.debug("Reusing enumeration at eps=%g", eps)
        if isinstance(entry, CapExceeded):
            raise CapExceeded(entry.cap, entry.count, entry.what, entry.total)
        return entry


def greedy_mask(graph: ConflictGraph, order: Sequence[int]) -> int:
    """Greedy maximal independent set over local indices in the given order."""
    mask = 0
    blocked = 0
    for k in order:
        bit = 1 << int(k)
        if blocked & bit:
            continue
        mask |= bit
        blocked |= bit | graph.adjacency[int(k)]
    return mask


def greedy_lattice(domain: Domain, eps: float, order: Sequence[int], tie_tolerance: float = 0.0) -> Lattice:
    """Scan points in `order`, keeping each one that is >= eps from all kept points."""
    order = [int(p) for p in order]
    if sorted(order) != sorted(domain.ids):
        raise PreconditionError("order must be a permutation of the domain ids")
    graph = conflict_graph(domain, eps, tie_tolerance)
    mask = greedy_mask(graph, [domain.local_index(p) for p in order])
    return Lattice(members=graph.members_of(mask), eps=float(eps), domain=domain)


def random_lattice(domain: Domain, eps: float, rng_seed: int, tie_tolerance: float = 0.0) -> Lattice:
    """greedy_lattice under a seed-determined uniform random permutation."""
    graph = conflict_graph(domain, eps, tie_tolerance)
    order = np.random.default_rng(seed_entropy(rng_seed)).permutation(graph.n)
    mask = greedy_mask(graph, order)
    return Lattice(members=graph.members_of(mask), eps=float(eps), domain=domain)


def minimum_lattice(
    domain: Domain,
    eps: float,
    state_budget: Optional[int] = None,
    tie_tolerance: float = 0.0,
) -> Lattice:
    """A smallest eps-lattice of the domain, found exactly.

    Smallest lattices are minimum independent dominating sets of the conflict
    graph. The search always dominates the lowest undominated point next and
    memoizes on the dominated set, which keeps grid-like domains polynomial.

    Raises:
        CapExceeded: more than `state_budget` distinct search states
    """
    budget = Config().enum_cap if state_budget is None else state_budget
    graph = conflict_graph(domain, eps, tie_tolerance)
    full = graph.full_mask
    closed = [row | (1 << k) for k, row in enumerate(graph.adjacency)]
    memo = {}

    def solve(dominated: int) -> int:
        if dominated == full:
            return 0
        hit = memo.get(dominated)
        if hit is not None:
            return hit[0]
        if len(memo) >= budget:
            raise CapExceeded(budget, len(memo), what="search states")
        free = full & ~dominated
        v = (free & -free).bit_length() - 1
        best, choice = graph.n + 1, -1
        for u in iter_bits(closed[v] & free):
            size = 1 + solve(dominated | closed[u])
            if size < best:
                best, choice = size, u
        memo[dominated] = (best, choice)
        return best

    solve(0)
    mask, dominated = 0, 0
    while dominated != full:
        u = memo[dominated][1]
        mask |= 1 << u
        dominated |= closed[u]
    logger.debug("Minimum lattice at eps=%g has %d points (%d states)", eps, mask.bit_count(), len(memo))
    return Lattice(members=graph.members_of(mask), eps=float(eps), domain=domain)


def minimum_lattice_size(
    domain: Domain,
    eps: float,
    state_budget: Optional[int] = None,
    tie_tolerance: float = 0.0,
) -> int:
    """Cardinality of a smallest eps-lattice (see minimum_lattice)."""
    return len(minimum_lattice(domain, eps, state_budget, tie_tolerance))
