from __future__ import annotations

from typing import Iterable

import numpy as np

from ..exceptions import PointIdError, PreconditionError
from ..logging_config import get_logger
from ..metric.models import Domain
from .models import ConflictGraph

logger = get_logger(__name__)


def conflict_graph(domain: Domain, eps: float, tie_tolerance: float = 0.0) -> ConflictGraph:
    """Edge (i, j) iff distance(i, j) < eps (+ tie_tolerance), i != j.

    Comparison is strict: two points exactly eps apart may share a dispersion.
    """
    if not eps > 0:
        raise PreconditionError(f"eps must be positive, got {eps}")
    if tie_tolerance < 0:
        raise PreconditionError("tie tolerance must be non-negative")
    threshold = eps + tie_tolerance
    D = domain.matrix
    close = (D < threshold) | (D.T < threshold)
    np.fill_diagonal(close, False)

    adjacency = []
    for row in close:
        mask = 0
        for j in np.flatnonzero(row):
            mask |= 1 << int(j)
        adjacency.append(mask)

    graph = ConflictGraph(ids=tuple(domain.ids), eps=float(eps), adjacency=tuple(adjacency), tie_tolerance=tie_tolerance)
    logger.debug("Conflict graph at eps=%g: %d points, %d edges", eps, graph.n, graph.edge_count())
    return graph


def subset_mask(domain: Domain, subset: Iterable[int]) -> int:
    """Bitmask (local indices) of a set of point ids.

    Raises:
        PointIdError: an id outside the domain
    """
    mask = 0
    for pid in subset:
        if not domain.contains(pid):
            raise PointIdError(f"point id {pid} is not in the domain")
        mask |= 1 << domain.local_index(pid)
    return mask
