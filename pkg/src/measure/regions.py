"""
JSON region documents, resolved to point-id sets against a space.

    {"type": "ids", "ids": [0, 1, 2]}
    {"type": "all"}
    {"type": "box", "lower": [0.0], "upper": [0.5]}          (inclusive)
    {"type": "ball", "center": [0.5, 0.5], "radius": 0.25}   (euclidean, inclusive)
    {"type": "union", "regions": [{...}, {...}]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Annotated, FrozenSet, List, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, model_validator

from ..exceptions import PreconditionError
from ..logging_config import get_logger
from ..metric.models import Domain
from .relative import require_in_domain

logger = get_logger(__name__)


class _Region(BaseModel):
    model_config = ConfigDict(extra="forbid")


class IdsRegion(_Region):
    type: Literal["ids"]
    ids: List[int] = Field(default_factory=list)

    def resolve(self, space: Domain) -> FrozenSet[int]:
        ids = frozenset(self.ids)
        require_in_domain(ids, space, "region")
        return ids


class AllRegion(_Region):
    type: Literal["all"]

    def resolve(self, space: Domain) -> FrozenSet[int]:
        return frozenset(space.ids)


def _coords(space: Domain, dimension: int) -> np.ndarray:
    coords = space.coords
    if coords is None:
        raise PreconditionError("geometric regions need a space with coordinates")
    if coords.shape[1] != dimension:
        raise PreconditionError(f"region has dimension {dimension}, space has {coords.shape[1]}")
    return coords


class BoxRegion(_Region):
    type: Literal["box"]
    lower: List[float] = Field(min_length=1)
    upper: List[float] = Field(min_length=1)

    @model_validator(mode="after")
    def _same_dimension(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("box corners have different dimensions")
        return self

    def resolve(self, space: Domain) -> FrozenSet[int]:
        coords = _coords(space, len(self.lower))
        inside = np.all((coords >= np.array(self.lower)) & (coords <= np.array(self.upper)), axis=1)
        return frozenset(space.ids[k] for k in np.flatnonzero(inside))


class BallRegion(_Region):
    type: Literal["ball"]
    center: List[float] = Field(min_length=1)
    radius: float = Field(ge=0)

    def resolve(self, space: Domain) -> FrozenSet[int]:
        coords = _coords(space, len(self.center))
        dist = np.sqrt(np.sum((coords - np.array(self.center)) ** 2, axis=1))
        return frozenset(space.ids[k] for k in np.flatnonzero(dist <= self.radius))


class UnionRegion(_Region):
    type: Literal["union"]
    regions: List["RegionDocument"] = Field(min_length=1)

    def resolve(self, space: Domain) -> FrozenSet[int]:
        return frozenset().union(*(r.resolve(space) for r in self.regions))


RegionDocument = Annotated[
    Union[IdsRegion, AllRegion, BoxRegion, BallRegion, UnionRegion],
    Field(discriminator="type"),
]

UnionRegion.model_rebuild()

_adapter = TypeAdapter(RegionDocument)


def parse_region_document(raw: object):
    return _adapter.validate_python(raw)


def load_region_document(path: Union[str, Path]):
    with open(path, "r", encoding="utf-8") as f:
        raw = json.load(f)
    return parse_region_document(raw)


def resolve_region(region, space: Domain) -> FrozenSet[int]:
    """Point ids of the space inside a region (a document or its parsed JSON).

    Raises:
        pydantic.ValidationError: malformed region
        PreconditionError: geometric region on a space without matching coordinates
        PreconditionError: id list with ids outside the space
    """
    if not isinstance(region, BaseModel):
        region = parse_region_document(region)
    ids = region.resolve(space)
    logger.debug("Region %s resolved to %d points", region.type, len(ids))
    return ids
