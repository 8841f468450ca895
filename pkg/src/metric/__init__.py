"""
Finite metric spaces: construction, validation and restriction to subspaces.
"""

from .documents import SpaceDocument, load_space_document
from .models import Domain, MetricSpace, Subspace, ValidationReport, Violation
from .space import (
    build_space,
    diameter,
    distance,
    min_positive_distance,
    pairwise_distances,
    repair_metric,
    restrict,
    space_from_coords,
    space_from_matrix,
    uniform_grid,
    validate_metric,
)

__all__ = [
    'Domain',
    'MetricSpace',
    'Subspace',
    'SpaceDocument',
    'ValidationReport',
    'Violation',
    'build_space',
    'diameter',
    'distance',
    'load_space_document',
    'min_positive_distance',
    'pairwise_distances',
    'repair_metric',
    'restrict',
    'space_from_coords',
    'space_from_matrix',
    'uniform_grid',
    'validate_metric',
]
