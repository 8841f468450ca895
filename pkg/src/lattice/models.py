from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..metric.models import Domain


def iter_bits(mask: int) -> Iterator[int]:
    """Set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_positions(mask: int, n: int) -> np.ndarray:
    """Set bit positions of a mask below bit n, ascending, as an int array."""
    raw = np.frombuffer(mask.to_bytes(max(1, (n + 7) // 8), "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")[:n])


SEED_MASK = (1 << 64) - 1


def seed_entropy(seed: int) -> int:
    """A 64-bit seed, negative ones included, as the unsigned entropy numpy accepts."""
    return int(seed) & SEED_MASK


@dataclass(frozen=True, eq=False)
class ConflictGraph:
    """Graph on a domain with an edge between every pair closer than eps.

    Adjacency is stored as one bitmask per local index (bit k stands for
    ids[k]); a set is an eps-dispersion iff it is independent here, and an
    eps-lattice iff it is a maximal independent set.
    """
    ids: Tuple[int, ...]
    eps: float
    adjacency: Tuple[int, ...]
    tie_tolerance: float = 0.0

    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> List[Tuple[int, int]]:
        pairs = []
        for i, row in enumerate(self.adjacency):
            for j in iter_bits(row >> (i + 1)):
                pairs.append((self.ids[i], self.ids[i + 1 + j]))
        return pairs

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def degree(self, local: int) -> int:
        return self.adjacency[local].bit_count()

    def members_of(self, mask: int) -> Tuple[int, ...]:
        return tuple(self.ids[k] for k in iter_bits(mask))


@dataclass(frozen=True)
class Lattice:
    """One eps-lattice of a domain: a maximal eps-dispersion, as sorted point ids."""
    members: Tuple[int, ...]
    eps: float
    domain: Optional[Domain] = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, pid: int) -> bool:
        return pid in self.members


class Direction(str, Enum):
    MINIMIZE = "minimize"
    MAXIMIZE = "maximize"


@dataclass(frozen=True)
class BoundEstimate:
    """Best lattice found by the extremal search and its objective value.

    For MINIMIZE the value is >= the true infimum, for MAXIMIZE <= the true
    supremum: the search only ever visits real lattices.
    """
    value: float
    lattice: Lattice
    direction: Direction
    evaluations: int = 0
