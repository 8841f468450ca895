"""
Tests for function specs, binding and function documents.
"""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from src.exceptions import FunctionBindingError, PointIdError
from src.functions import (
    Constant,
    Coordinate,
    Indicator,
    LinearCombo,
    Polynomial,
    Table,
    bind,
    combine,
    evaluate,
    indicator,
    load_function_document,
    negate,
    parse_function_document,
    scale,
    shift,
    table,
)
from src.metric import restrict, space_from_coords, space_from_matrix


def test_evaluate_examples(e5):
    assert evaluate(Coordinate(0), e5, 2) == 0.5
    assert evaluate(indicator({0, 1, 2}), e5, 3) == 0.0
    assert evaluate(Constant(3.5), e5, 4) == 3.5
    assert evaluate(Polynomial(0, (1.0, 0.0, 4.0)), e5, 1) == 1.25


def test_bind_in_id_order(e5):
    assert bind(indicator({0, 1, 2}), e5) == (1.0, 1.0, 1.0, 0.0, 0.0)
    assert bind(Coordinate(0), restrict(e5, [4, 1])) == (0.25, 1.0)


def test_partial_table_rejected(e5):
    with pytest.raises(FunctionBindingError):
        bind(Table({0: 1.0, 1: 2.0}), e5)


def test_coordinate_needs_coordinates():
    space = space_from_matrix([[0, 1], [1, 0]])
    with pytest.raises(FunctionBindingError):
        bind(Coordinate(0), space)
    with pytest.raises(FunctionBindingError):
        bind(Polynomial(0, (1.0,)), space)


def test_axis_out_of_range(e5):
    with pytest.raises(FunctionBindingError):
        bind(Coordinate(1), e5)


def test_foreign_point_rejected(e5):
    with pytest.raises(PointIdError):
        evaluate(Constant(1.0), restrict(e5, [0, 1]), 3)


def test_empty_linear_combination_rejected():
    with pytest.raises(FunctionBindingError):
        LinearCombo(())


def test_derived_constructors(e5):
    x = Coordinate(0)
    assert bind(negate(x), e5) == (-0.0, -0.25, -0.5, -0.75, -1.0)
    assert bind(scale(2.0, x), e5) == (0.0, 0.5, 1.0, 1.5, 2.0)
    assert bind(shift(x, 1.0), e5) == (1.0, 1.25, 1.5, 1.75, 2.0)
    assert bind(combine(1.0, x, -1.0, x), e5) == (0.0,) * 5
    assert table({"3": 1}).values == {3: 1.0}


@given(
    st.lists(st.floats(-100, 100, allow_nan=False), min_size=5, max_size=5),
    st.floats(-5, 5, allow_nan=False),
    st.floats(-5, 5, allow_nan=False),
)
@settings(max_examples=50, deadline=None)
def test_combination_is_pointwise(values, alpha, beta):
    e5 = space_from_coords([[0.0], [0.25], [0.5], [0.75], [1.0]])
    f = Table(dict(enumerate(values)))
    g = Coordinate(0)
    combined = bind(combine(alpha, f, beta, g), e5)
    for pid in e5.ids:
        expected = 0.0 + alpha * f.values[pid]
        expected += beta * e5.coords[pid, 0]
        assert combined[pid] == expected


@pytest.mark.parametrize("raw, expected", [
    ({"type": "constant", "value": 3.5}, Constant(3.5)),
    ({"type": "coordinate"}, Coordinate(0)),
    ({"type": "polynomial", "axis": 0, "coefficients": [0, 1]}, Polynomial(0, (0.0, 1.0))),
    ({"type": "indicator", "ids": [2, 0]}, Indicator(frozenset({0, 2}))),
])
def test_parse_simple_documents(raw, expected):
    assert parse_function_document(raw) == expected


def test_parse_tables_and_combinations(e5):
    by_key = parse_function_document({"type": "table", "values": {"0": 1, "1": 2, "2": 3, "3": 4, "4": 5}})
    by_list = parse_function_document({"type": "table", "values": [1, 2, 3, 4, 5]})
    assert bind(by_key, e5) == bind(by_list, e5) == (1.0, 2.0, 3.0, 4.0, 5.0)

    combo = parse_function_document({
        "type": "linear_combo",
        "terms": [
            {"weight": 2.0, "function": {"type": "coordinate", "axis": 0}},
            {"weight": -1.0, "function": {"type": "constant", "value": 1.0}},
        ],
    })
    assert bind(combo, e5) == (-1.0, -0.5, 0.0, 0.5, 1.0)


@pytest.mark.parametrize("raw", [
    {"type": "sine"},
    {"type": "constant"},
    {"type": "coordinate", "axis": -1},
    {"type": "linear_combo", "terms": []},
    {"type": "constant", "value": 1.0, "extra": True},
])
def test_malformed_function_documents(raw):
    with pytest.raises(ValidationError):
        parse_function_document(raw)


def test_load_function_document(tmp_path, e5):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"type": "coordinate", "axis": 0}))
    assert bind(load_function_document(path), e5) == (0.0, 0.25, 0.5, 0.75, 1.0)
