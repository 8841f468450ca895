"""
JSON space documents.

    {"points": [{"id": 0, "label": "a", "coords": [0.0]}, ...],
     "metric": "euclidean" | "manhattan" | "chebyshev" | {"matrix": [[...], ...]}}

Ids default to list order. With a matrix metric the points list is optional
and only carries labels.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class PointEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: Optional[int] = Field(default=None, ge=0)
    label: Optional[str] = None
    coords: Optional[List[float]] = None


class MatrixMetric(BaseModel):
    model_config = ConfigDict(extra="forbid")

    matrix: List[List[float]]


class SpaceDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    points: List[PointEntry] = Field(default_factory=list)
    metric: Union[Literal["euclidean", "manhattan", "chebyshev"], MatrixMetric] = "euclidean"


def load_space_document(path: Union[str, Path]) -> SpaceDocument:
    """Read and validate a space document.

    Raises:
        OSError: unreadable file
        json.JSONDecodeError / pydantic.ValidationError: malformed document
    """
    with open(path, "r", encoding="utf-8") as f:
        raw = json.load(f)
    return SpaceDocument.model_validate(raw)
