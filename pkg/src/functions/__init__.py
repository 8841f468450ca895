from .documents import load_function_document, parse_function_document
from .models import (
    Constant,
    Coordinate,
    FnSpec,
    Indicator,
    LinearCombo,
    Polynomial,
    Table,
    bind,
    combine,
    evaluate,
    indicator,
    negate,
    scale,
    shift,
    table,
)

__all__ = [
    'Constant',
    'Coordinate',
    'FnSpec',
    'Indicator',
    'LinearCombo',
    'Polynomial',
    'Table',
    'bind',
    'combine',
    'evaluate',
    'indicator',
    'load_function_document',
    'negate',
    'parse_function_document',
    'scale',
    'shift',
    'table',
]
