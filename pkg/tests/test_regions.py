"""
Tests for region documents and their resolution against a space.
"""

import json

import pytest
from pydantic import ValidationError

from src.exceptions import PreconditionError
from src.measure import load_region_document, parse_region_document, resolve_region
from src.metric import space_from_coords, space_from_matrix


@pytest.fixture
def plane():
    return space_from_coords([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0], [0.5, 0.5]])


def test_ids_and_all(e5):
    assert resolve_region({"type": "ids", "ids": [3, 1, 3]}, e5) == frozenset({1, 3})
    assert resolve_region({"type": "ids"}, e5) == frozenset()
    assert resolve_region({"type": "all"}, e5) == frozenset(range(5))


def test_box_bounds_are_inclusive(e5, grid201):
    assert resolve_region({"type": "box", "lower": [0.25], "upper": [0.75]}, e5) == frozenset({1, 2, 3})
    quarter = resolve_region({"type": "box", "lower": [0.0], "upper": [0.25]}, grid201)
    assert len(quarter) == 51


def test_ball_radius_is_inclusive(plane):
    assert resolve_region({"type": "ball", "center": [0.0, 0.0], "radius": 1.0}, plane) == frozenset({0, 1, 2, 4})
    assert resolve_region({"type": "ball", "center": [0.5, 0.5], "radius": 0.1}, plane) == frozenset({4})


def test_union(plane):
    region = {
        "type": "union",
        "regions": [
            {"type": "ids", "ids": [3]},
            {"type": "box", "lower": [0.0, 0.0], "upper": [0.0, 1.0]},
        ],
    }
    assert resolve_region(region, plane) == frozenset({0, 2, 3})


def test_parsed_documents_resolve_too(e5, tmp_path):
    path = tmp_path / "region.json"
    path.write_text(json.dumps({"type": "box", "lower": [0.5], "upper": [1.0]}))
    region = load_region_document(path)
    assert resolve_region(region, e5) == frozenset({2, 3, 4})
    assert resolve_region(parse_region_document({"type": "all"}), e5) == frozenset(range(5))


def test_geometry_mismatches(e5):
    with pytest.raises(PreconditionError):
        resolve_region({"type": "box", "lower": [0.0, 0.0], "upper": [1.0, 1.0]}, e5)
    with pytest.raises(PreconditionError):
        resolve_region({"type": "ball", "center": [0.0], "radius": 1.0}, space_from_matrix([[0, 1], [1, 0]]))


def test_foreign_ids(e5):
    with pytest.raises(PreconditionError):
        resolve_region({"type": "ids", "ids": [0, 9]}, e5)


@pytest.mark.parametrize("raw", [
    {"type": "polygon"},
    {"type": "box", "lower": [0.0], "upper": [1.0, 2.0]},
    {"type": "box", "lower": [], "upper": []},
    {"type": "ball", "center": [0.0], "radius": -1.0},
    {"type": "union", "regions": []},
])
def test_malformed_regions(raw, e5):
    with pytest.raises(ValidationError):
        resolve_region(raw, e5)
