from .boundary import RatioObjective, boundary_ratio_bounds, composition_check, thin_boundary_verdict
from .models import Boundary, BoundaryRatioBounds, MeasureResult, SupersetTrail, ThinBoundaryResult
from .regions import RegionDocument, load_region_document, parse_region_document, resolve_region
from .relative import (
    additivity_check,
    complement_check,
    disjoint_union_check,
    is_measurable,
    relative_measure,
)

__all__ = [
    'Boundary',
    'BoundaryRatioBounds',
    'MeasureResult',
    'RatioObjective',
    'RegionDocument',
    'SupersetTrail',
    'ThinBoundaryResult',
    'additivity_check',
    'boundary_ratio_bounds',
    'complement_check',
    'composition_check',
    'disjoint_union_check',
    'is_measurable',
    'load_region_document',
    'parse_region_document',
    'relative_measure',
    'resolve_region',
    'thin_boundary_verdict',
]
