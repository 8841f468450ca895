"""
Local search over eps-lattices for extremal objective values.

A move removes one member (or forces one point in and evicts its conflicts)
and re-maximalizes greedily, so every visited state
is a genuine lattice and every reported value is witnessed by one. Restarts
draw independent generators from one SeedSequence, which makes the merged
result independent of the order restarts are evaluated in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import PreconditionError
from ..functions.models import FnSpec, bind
from ..logging_config import get_logger
from ..metric.models import Domain
from .conflict import conflict_graph
from .lattices import greedy_mask
from .models import BoundEstimate, ConflictGraph, Direction, Lattice, bit_positions, iter_bits, seed_entropy

logger = get_logger(__name__)


@dataclass(frozen=True)
class SearchConfig:
    """Local search settings.

    max_moves defaults to 10·n for the domain being searched. rng_seed may be
    any 64-bit integer; a negative seed runs as its unsigned twin.
    """
    restarts: int = 16
    max_moves: Optional[int] = None
    rng_seed: int = 0
    anneal: bool = False
    initial_temperature: float = 1.0
    cooling: float = 0.95

    def __post_init__(self):
        if self.restarts < 1:
            raise PreconditionError("restarts must be positive")
        if self.max_moves is not None and self.max_moves < 1:
            raise PreconditionError("max_moves must be positive")
        if not 0 < self.cooling < 1:
            raise PreconditionError("cooling ratio must lie in (0, 1)")
        if self.initial_temperature <= 0:
            raise PreconditionError("initial temperature must be positive")

    def moves_for(self, n: int) -> int:
        return self.max_moves if self.max_moves is not None else 10 * n


class Objective:
    """What the search optimizes over lattices (given as local-index bitmasks).

    score() may return None for lattices on which the objective is undefined;
    those are never reported. priority() orders re-maximalization candidates:
    ascending when minimizing, descending when maximizing.
    """

    def score(self, mask: int) -> Optional[float]:
        raise NotImplementedError

    def priority(self, local: int) -> float:
        raise NotImplementedError


class MeanObjective(Objective):
    """Sample mean of bound function values, summed in ascending id order."""

    def __init__(self, values: Sequence[float]):
        self.values = list(values)

    def score(self, mask: int) -> Optional[float]:
        members = bit_positions(mask, mask.bit_length()).tolist()
        total = 0.0
        for k in members:
            total += self.values[k]
        return total / len(members) if members else None

    def priority(self, local: int) -> float:
        return self.values[local]


class SizeObjective(Objective):
    """Lattice cardinality; high-degree points first when minimizing."""

    def __init__(self, graph: ConflictGraph):
        self.degrees = [graph.degree(k) for k in range(graph.n)]

    def score(self, mask: int) -> Optional[float]:
        return float(mask.bit_count())

    def priority(self, local: int) -> float:
        return -self.degrees[local]


class LatticeSearch:
    """Restarted remove-one/re-maximalize local search on one conflict graph."""

    def __init__(self, graph: ConflictGraph, objective: Objective, direction: Direction, cfg: SearchConfig):
        self.graph = graph
        self.objective = objective
        self.direction = Direction(direction)
        self.cfg = cfg
        self.evaluations = 0
        self._sign = 1.0 if self.direction is Direction.MINIMIZE else -1.0
        # candidate order is fixed per search: objective contribution, then id
        self._order = sorted(range(graph.n), key=lambda k: (self._sign * objective.priority(k), graph.ids[k]))
        self._ascending = all(a < b for a, b in zip(graph.ids, graph.ids[1:]))
        self._rank = [0] * graph.n
        for position, k in enumerate(self._order):
            self._rank[k] = position

    def _value(self, score: Optional[float]) -> float:
        return math.inf if score is None else self._sign * score

    def _key(self, mask: int, score: Optional[float]) -> Tuple[float, Tuple[int, ...]]:
        return self._value(score), self.graph.members_of(mask)

    def _members_less(self, mask: int, other: int) -> bool:
        """members_of(mask) < members_of(other), read off the lowest differing bit when ids ascend."""
        if not self._ascending:
            return self.graph.members_of(mask) < self.graph.members_of(other)
        low = (mask ^ other) & -(mask ^ other)
        if not low:
            return False
        above = ~((low << 1) - 1)
        if mask & low:
            return bool(other & above)
        return not mask & above

    def _better(self, value: float, mask: int, other_value: float, other_mask: int) -> bool:
        """Same ordering as comparing _key tuples."""
        if value != other_value:
            return value < other_value
        return self._members_less(mask, other_mask)

    def _evaluate(self, mask: int) -> Optional[float]:
        self.evaluations += 1
        return self.objective.score(mask)

    def _remaximalize(self, base: int, candidates: int, removed: Optional[int] = None) -> int:
        """Greedily extend base in search order.

        Points outside `candidates` must already conflict with base; only the
        candidates are scanned.
        """
        adjacency = self.graph.adjacency
        mask = base
        free = [k for k in iter_bits(candidates & ~base) if k != removed and not adjacency[k] & base]
        for k in sorted(free, key=self._rank.__getitem__):
            if not adjacency[k] & mask:
                mask |= 1 << k
        if removed is not None and not adjacency[removed] & mask:
            mask |= 1 << removed
        return mask

    def _neighbor(self, mask: int, rng: np.random.Generator) -> int:
        """One move: drop a member, or force a non-member in and drop its conflicts.

        Either way the result is re-maximalized and is again a lattice.
        """
        adjacency = self.graph.adjacency
        outside = self.graph.full_mask & ~mask
        if outside and rng.random() < 0.5:
            points = bit_positions(outside, self.graph.n)
            inserted = int(points[int(rng.integers(len(points)))])
            evicted = mask & adjacency[inserted]
            base = (mask & ~evicted) | (1 << inserted)
            candidates = 0
            for u in iter_bits(evicted):
                candidates |= adjacency[u]
            return self._remaximalize(base, candidates)
        members = bit_positions(mask, self.graph.n)
        removed = int(members[int(rng.integers(len(members)))])
        return self._remaximalize(mask & ~(1 << removed), adjacency[removed], removed)

    def _restart(self, rng: np.random.Generator) -> Tuple[Tuple[float, Tuple[int, ...]], int, Optional[float]]:
        mask = greedy_mask(self.graph, rng.permutation(self.graph.n))
        score = self._evaluate(mask)
        value = self._value(score)
        best_mask, best_score, best_value = mask, score, value
        temperature = self.cfg.initial_temperature

        for _ in range(self.cfg.moves_for(self.graph.n)):
            candidate = self._neighbor(mask, rng)
            if candidate != mask:
                cand_score = self._evaluate(candidate)
                cand_value = self._value(cand_score)
                accept = self._better(cand_value, candidate, value, mask)
                if not accept and self.cfg.anneal and math.isfinite(cand_value) and math.isfinite(value):
                    worse_by = cand_value - value
                    accept = rng.random() < math.exp(-worse_by / temperature)
                if accept:
                    logger.super_debug("move accepted: %s -> %s", score, cand_score)
                    mask, score, value = candidate, cand_score, cand_value
                    if self._better(value, mask, best_value, best_mask):
                        best_mask, best_score, best_value = mask, score, value
            temperature = max(temperature * self.cfg.cooling, 1e-300)

        return self._key(best_mask, best_score), best_mask, best_score

    def run(self) -> Optional[BoundEstimate]:
        """Best lattice over all restarts, or None when no lattice has a defined score."""
        streams = np.random.SeedSequence(seed_entropy(self.cfg.rng_seed)).spawn(self.cfg.restarts)
        results = [self._restart(np.random.default_rng(s)) for s in streams]
        key, mask, score = min(results, key=lambda r: r[0])
        logger.debug(
            "Search %s over %d points: %d restarts, %d evaluations, best %s",
            self.direction.value, self.graph.n, self.cfg.restarts, self.evaluations, score,
        )
        if score is None:
            return None
        lattice = Lattice(members=self.graph.members_of(mask), eps=self.graph.eps)
        return BoundEstimate(value=score, lattice=lattice, direction=self.direction, evaluations=self.evaluations)


def search_lattices(
    domain: Domain,
    eps: float,
    objective_factory: Callable[[ConflictGraph], Objective],
    direction: Direction,
    cfg: SearchConfig,
    tie_tolerance: float = 0.0,
) -> Optional[BoundEstimate]:
    """Run the local search with an objective built for the domain's conflict graph."""
    graph = conflict_graph(domain, eps, tie_tolerance)
    estimate = LatticeSearch(graph, objective_factory(graph), direction, cfg).run()
    if estimate is None:
        return None
    lattice = Lattice(members=estimate.lattice.members, eps=float(eps), domain=domain)
    return BoundEstimate(estimate.value, lattice, estimate.direction, estimate.evaluations)


def extremal_average(
    domain: Domain,
    eps: float,
    f: FnSpec,
    direction: Direction,
    cfg: Optional[SearchConfig] = None,
    tie_tolerance: float = 0.0,
) -> BoundEstimate:
    """Smallest (or largest) sample mean of f found over eps-lattices.

    An inner approximation: for MINIMIZE the value is >= l_eps(f), for
    MAXIMIZE <= u_eps(f).
    """
    cfg = cfg or SearchConfig()
    values = bind(f, domain)
    return search_lattices(domain, eps, lambda _graph: MeanObjective(values), direction, cfg, tie_tolerance)


def smallest_lattice_found(domain: Domain, eps: float, cfg: Optional[SearchConfig] = None) -> Lattice:
    """Heuristic smallest lattice, for domains too large for minimum_lattice()."""
    cfg = cfg or SearchConfig()
    return search_lattices(domain, eps, SizeObjective, Direction.MINIMIZE, cfg).lattice
