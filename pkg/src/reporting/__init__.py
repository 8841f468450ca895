from .tables import FORMATS, ResultTable, TableWriter, format_cell, summary_line

__all__ = [
    'FORMATS',
    'ResultTable',
    'TableWriter',
    'format_cell',
    'summary_line',
]
