"""
JSON function documents.

    {"type": "constant", "value": 3.5}
    {"type": "coordinate", "axis": 0}
    {"type": "polynomial", "axis": 0, "coefficients": [0.0, 1.0]}
    {"type": "table", "values": {"0": 1.0, "1": 2.5}}     (or a list indexed by id)
    {"type": "indicator", "ids": [0, 1, 2]}
    {"type": "linear_combo", "terms": [{"weight": 2.0, "function": {...}}, ...]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Annotated, Dict, List, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter

from .models import (
    Constant,
    Coordinate,
    FnSpec,
    Indicator,
    LinearCombo,
    Polynomial,
    Table,
)


class _Doc(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ConstantDoc(_Doc):
    type: Literal["constant"]
    value: float

    def to_fnspec(self) -> FnSpec:
        return Constant(self.value)


class CoordinateDoc(_Doc):
    type: Literal["coordinate"]
    axis: int = Field(default=0, ge=0)

    def to_fnspec(self) -> FnSpec:
        return Coordinate(self.axis)


class PolynomialDoc(_Doc):
    type: Literal["polynomial"]
    axis: int = Field(default=0, ge=0)
    coefficients: List[float] = Field(min_length=1)

    def to_fnspec(self) -> FnSpec:
        return Polynomial(self.axis, tuple(self.coefficients))


class TableDoc(_Doc):
    type: Literal["table"]
    values: Union[Dict[int, float], List[float]]

    def to_fnspec(self) -> FnSpec:
        if isinstance(self.values, list):
            return Table(dict(enumerate(self.values)))
        return Table(dict(self.values))


class IndicatorDoc(_Doc):
    type: Literal["indicator"]
    ids: List[int] = Field(default_factory=list)

    def to_fnspec(self) -> FnSpec:
        return Indicator(frozenset(self.ids))


class TermDoc(_Doc):
    weight: float
    function: "FunctionDocument"


class LinearComboDoc(_Doc):
    type: Literal["linear_combo"]
    terms: List[TermDoc] = Field(min_length=1)

    def to_fnspec(self) -> FnSpec:
        return LinearCombo(tuple((t.weight, t.function.to_fnspec()) for t in self.terms))


FunctionDocument = Annotated[
    Union[ConstantDoc, CoordinateDoc, PolynomialDoc, TableDoc, IndicatorDoc, LinearComboDoc],
    Field(discriminator="type"),
]

TermDoc.model_rebuild()
LinearComboDoc.model_rebuild()

_adapter = TypeAdapter(FunctionDocument)


def parse_function_document(raw: object) -> FnSpec:
    """Validate a parsed JSON object and convert it to a FnSpec."""
    return _adapter.validate_python(raw).to_fnspec()


def load_function_document(path: Union[str, Path]) -> FnSpec:
    with open(path, "r", encoding="utf-8") as f:
        raw = json.load(f)
    return parse_function_document(raw)
