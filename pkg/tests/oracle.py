"""
Brute-force reference for lattices and lower/upper means.

Scans every subset of the domain and keeps the single-point-maximal
dispersions. Uses nothing from the lattice or mean engines, only the
distance oracle of the space.
"""

from typing import List, Tuple

from src.exceptions import PreconditionError

MAX_ORACLE_POINTS = 20


def _check_size(domain) -> None:
    if domain.size > MAX_ORACLE_POINTS:
        raise PreconditionError(f"oracle limited to {MAX_ORACLE_POINTS} points, got {domain.size}")


def oracle_lattices(domain, eps: float) -> List[Tuple[int, ...]]:
    """Every eps-lattice of the domain as a sorted id tuple, in sorted order."""
    _check_size(domain)
    ids = list(domain.ids)
    n = len(ids)
    near = [0] * n
    for a in range(n):
        for b in range(n):
            if a != b and (domain.distance(ids[a], ids[b]) < eps or domain.distance(ids[b], ids[a]) < eps):
                near[a] |= 1 << b

    found = []
    for subset in range(1, 1 << n):
        inside = [a for a in range(n) if subset >> a & 1]
        if any(near[a] & subset for a in inside):
            continue
        outside = [a for a in range(n) if not subset >> a & 1]
        if all(near[a] & subset for a in outside):
            found.append(tuple(ids[a] for a in inside))
    return sorted(found)


def oracle_bounds(domain, f, eps: float) -> Tuple[float, float]:
    """(min, max) of the sample mean of f over all eps-lattices."""
    averages = []
    for members in oracle_lattices(domain, eps):
        total = 0.0
        for pid in members:
            total += f.evaluate(domain, pid)
        averages.append(total / len(members))
    return min(averages), max(averages)
