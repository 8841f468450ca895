"""
Metric space construction, validation and restriction.

All distances go through pairwise_distances() once, at construction; distance()
only reads the stored matrix, so coordinate-backed and matrix-backed spaces
answer identically for identical inputs.
"""

from __future__ import annotations

from typing import Any, Iterable, List, Mapping, Optional, Sequence, Union

import numpy as np

from ..exceptions import PointIdError, PreconditionError, SpaceDefinitionError
from ..logging_config import get_logger
from .documents import MatrixMetric, SpaceDocument
from .models import (
    MATRIX_METRIC,
    NAMED_METRICS,
    Domain,
    MetricSpace,
    Subspace,
    ValidationReport,
    Violation,
)

logger = get_logger(__name__)


def pairwise_distances(coords: np.ndarray, metric: str) -> np.ndarray:
    """Distance matrix of a coordinate cloud under a named metric.

    In one dimension every named metric is |x - y|, computed directly.
    """
    coords = np.asarray(coords, dtype=float)
    diff = coords[:, None, :] - coords[None, :, :]
    if coords.shape[1] == 1:
        return np.abs(diff[..., 0])
    if metric == "euclidean":
        return np.sqrt(np.sum(diff * diff, axis=-1))
    if metric == "manhattan":
        return np.sum(np.abs(diff), axis=-1)
    if metric == "chebyshev":
        return np.max(np.abs(diff), axis=-1)
    raise SpaceDefinitionError(f"unknown metric {metric!r}")


def build_space(description: Union[SpaceDocument, Mapping[str, Any]]) -> MetricSpace:
    """Build a MetricSpace from a space document (or its parsed JSON).

    Raises:
        SpaceDefinitionError: dimension mismatch, non-square matrix, negative
            or non-finite distance, missing coordinates, empty space
    """
    doc = description if isinstance(description, SpaceDocument) else SpaceDocument.model_validate(description)
    points = _order_points(doc)

    labels = None
    if any(p.label is not None for p in points):
        labels = tuple(p.label for p in points)

    if isinstance(doc.metric, MatrixMetric):
        matrix = _checked_matrix(doc.metric.matrix)
        n = matrix.shape[0]
        if points and len(points) != n:
            raise SpaceDefinitionError(f"{len(points)} points listed for a {n}x{n} matrix")
        coords = None
        if points and all(p.coords is not None for p in points):
            coords = _checked_coords([p.coords for p in points])
        space = MetricSpace(n=n, metric=MATRIX_METRIC, matrix=matrix, labels=labels, coords=coords)
    else:
        if not points:
            raise SpaceDefinitionError("a space needs at least one point")
        if any(p.coords is None for p in points):
            raise SpaceDefinitionError(f"metric {doc.metric!r} needs coordinates for every point")
        coords = _checked_coords([p.coords for p in points])
        matrix = pairwise_distances(coords, doc.metric)
        space = MetricSpace(n=len(points), metric=doc.metric, matrix=matrix, labels=labels, coords=coords)

    logger.debug("Built %s space with %d points", space.metric, space.n)
    return space


def _order_points(doc: SpaceDocument) -> list:
    points = list(doc.points)
    if not any(p.id is not None for p in points):
        return points
    if any(p.id is None for p in points):
        raise SpaceDefinitionError("either every point carries an id or none does")
    ids = sorted(p.id for p in points)
    if ids != list(range(len(points))):
        raise SpaceDefinitionError("point ids must be exactly 0..n-1")
    return sorted(points, key=lambda p: p.id)


def _checked_coords(rows: Sequence[Sequence[float]]) -> np.ndarray:
    dims = {len(r) for r in rows}
    if len(dims) != 1:
        raise SpaceDefinitionError(f"dimension mismatch: coordinate lengths {sorted(dims)}")
    if 0 in dims:
        raise SpaceDefinitionError("coordinates must have at least one axis")
    coords = np.array(rows, dtype=float)
    if not np.all(np.isfinite(coords)):
        raise SpaceDefinitionError("coordinates must be finite")
    return coords


def _checked_matrix(rows: Sequence[Sequence[float]]) -> np.ndarray:
    n = len(rows)
    if n == 0:
        raise SpaceDefinitionError("a space needs at least one point")
    if any(len(r) != n for r in rows):
        raise SpaceDefinitionError("distance matrix is not square")
    matrix = np.array(rows, dtype=float)
    if not np.all(np.isfinite(matrix)):
        raise SpaceDefinitionError("distance matrix entries must be finite")
    if np.any(matrix < 0):
        i, j = map(int, np.argwhere(matrix < 0)[0])
        raise SpaceDefinitionError(f"negative distance d({i},{j})={matrix[i, j]}")
    return matrix


def validate_metric(space: Domain, tolerance: float = 0.0) -> ValidationReport:
    """List every violated metric axiom instance beyond tolerance.

    Distinct points at distance 0 are reported as pseudo-metric warnings.
    An empty violation list means the space is a (pseudo-)metric.
    """
    if tolerance < 0:
        raise PreconditionError("tolerance must be non-negative")
    D = space.matrix
    ids = space.ids
    report = ValidationReport(tolerance=tolerance)
    m = D.shape[0]

    for i in range(m):
        if abs(D[i, i]) > tolerance:
            report.violations.append(Violation("identity", (ids[i], ids[i]), float(abs(D[i, i]))))

    asym = np.abs(D - D.T)
    for i, j in np.argwhere(np.triu(asym > tolerance, k=1)):
        report.violations.append(Violation("symmetry", (ids[i], ids[j]), float(asym[i, j])))

    # on a symmetric matrix (i, k, j) and (j, k, i) are the same check
    symmetric = np.array_equal(D, D.T)
    for k in range(m):
        via = D[:, k][:, None] + D[k, :][None, :]
        excess = D - via
        bad = excess > tolerance
        bad[k, :] = False
        bad[:, k] = False
        np.fill_diagonal(bad, False)
        if symmetric:
            bad = np.triu(bad, k=1)
        for i, j in np.argwhere(bad):
            report.violations.append(Violation("triangle", (ids[i], ids[k], ids[j]), float(excess[i, j])))

    zero = (D == 0) & (D.T == 0)
    for i, j in np.argwhere(np.triu(zero, k=1)):
        report.warnings.append(Violation("pseudo", (ids[i], ids[j]), 0.0))

    report.violations.sort(key=lambda v: (v.kind, v.points))
    if report.violations:
        logger.info("Metric validation found %d violations", len(report.violations))
    if report.warnings:
        logger.warning("Metric validation found %d zero-distance pairs", len(report.warnings))
    return report


def distance(space: Domain, i: int, j: int) -> float:
    """Metric value between two point ids of the domain."""
    return space.distance(i, j)


def diameter(space: Domain) -> float:
    """Largest pairwise distance; 0 for a singleton."""
    if space.size < 2:
        return 0.0
    return float(np.max(space.matrix))


def min_positive_distance(space: Domain) -> Optional[float]:
    """Smallest strictly positive pairwise distance, or None if there is none."""
    positive = space.matrix[space.matrix > 0]
    if positive.size == 0:
        return None
    return float(positive.min())


def restrict(space: Domain, members: Iterable[int]) -> Subspace:
    """Restrict a space (or subspace) to a nonempty subset of its ids.

    Raises:
        PreconditionError: empty member set
        PointIdError: an id outside the domain
    """
    members = sorted({int(m) for m in members})
    if not members:
        raise PreconditionError("cannot restrict to an empty member set")
    for pid in members:
        if not space.contains(pid):
            raise PointIdError(f"point id {pid} is not in the domain")
    return Subspace(parent=space.root, members=tuple(members))


def uniform_grid(count: int, lo: float = 0.0, hi: float = 1.0) -> MetricSpace:
    """Evenly spaced 1-D euclidean grid with `count` points from lo to hi."""
    if count < 1:
        raise PreconditionError("a grid needs at least one point")
    if count == 1:
        coords = np.array([[lo]], dtype=float)
    else:
        coords = np.array([[lo + (hi - lo) * k / (count - 1)] for k in range(count)], dtype=float)
    return MetricSpace(n=count, metric="euclidean", matrix=pairwise_distances(coords, "euclidean"), coords=coords)


def space_from_coords(coords: Sequence[Sequence[float]], metric: str = "euclidean") -> MetricSpace:
    """Shortcut for build_space on a bare coordinate list."""
    if metric not in NAMED_METRICS:
        raise SpaceDefinitionError(f"unknown metric {metric!r}")
    coords = _checked_coords(coords)
    return MetricSpace(n=coords.shape[0], metric=metric, matrix=pairwise_distances(coords, metric), coords=coords)


def space_from_matrix(matrix: Sequence[Sequence[float]], labels: Optional[List[str]] = None) -> MetricSpace:
    """Shortcut for build_space on a bare distance matrix."""
    checked = _checked_matrix(matrix)
    return MetricSpace(
        n=checked.shape[0],
        metric=MATRIX_METRIC,
        matrix=checked,
        labels=tuple(labels) if labels else None,
    )


def repair_metric(weights: np.ndarray) -> np.ndarray:
    """Close a symmetric non-negative weight matrix under shortest paths.

    The result satisfies the triangle inequality; with small dyadic weights all
    path sums are exact, so it does so without rounding slack.
    """
    D = np.array(weights, dtype=float)
    if D.ndim != 2 or D.shape[0] != D.shape[1]:
        raise SpaceDefinitionError("weight matrix is not square")
    D = np.minimum(D, D.T)
    np.fill_diagonal(D, 0.0)
    for k in range(D.shape[0]):
        D = np.minimum(D, D[:, k][:, None] + D[k, :][None, :])
    return D
