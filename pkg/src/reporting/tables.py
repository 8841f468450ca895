"""
CSV and JSON rendering of result tables.

Output must be byte-identical for identical inputs: columns are fixed per
table, floats go out with 17 significant digits in CSV and as their shortest
round-tripping repr in JSON, and nothing time- or host-dependent is written.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

FORMATS = ("csv", "json")


@dataclass
class ResultTable:
    title: str
    columns: Sequence[str]
    rows: List[Dict[str, Any]] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)  # verdict line in CSV, extra keys in JSON

    def add_row(self, **values: Any) -> None:
        unknown = set(values) - set(self.columns)
        if unknown:
            raise KeyError(f"unknown columns {sorted(unknown)} for table {self.title}")
        self.rows.append({c: values.get(c) for c in self.columns})


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, (list, tuple)):
        return " ".join(format_cell(v) for v in value)
    return str(value)


def summary_line(summary: Dict[str, Any]) -> str:
    """One trailing CSV line: the verdict bare, everything else as key=value.

    e.g. "HasMean estimate=0.5" or "count=4"; None values are left out.
    """
    parts = []
    for key, value in summary.items():
        if value is None:
            continue
        parts.append(format_cell(value) if key == "verdict" else f"{key}={format_cell(value)}")
    return " ".join(parts)


def _json_value(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    return value


class TableWriter:
    """Writes result tables to a file or standard output.

    Args:
        fmt: "csv" or "json"
        out: Output path; None writes to stdout
    """

    def __init__(self, fmt: str = "csv", out: Optional[Union[str, Path]] = None):
        if fmt not in FORMATS:
            raise ValueError(f"unknown output format {fmt!r}")
        self.fmt = fmt
        self.out = out

    def render(self, tables: Sequence[ResultTable]) -> str:
        if self.fmt == "json":
            return self._render_json(tables)
        return self._render_csv(tables)

    def _render_csv(self, tables: Sequence[ResultTable]) -> str:
        buffer = io.StringIO()
        for i, table in enumerate(tables):
            if len(tables) > 1:
                if i:
                    buffer.write("\n")
                buffer.write(f"# {table.title}\n")
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(table.columns)
            for row in table.rows:
                writer.writerow([format_cell(row[c]) for c in table.columns])
            line = summary_line(table.summary)
            if line:
                buffer.write(line + "\n")
        return buffer.getvalue()

    def _render_json(self, tables: Sequence[ResultTable]) -> str:
        def as_dict(table: ResultTable) -> Dict[str, Any]:
            doc: Dict[str, Any] = {"title": table.title, "columns": list(table.columns)}
            doc["rows"] = [{c: _json_value(row[c]) for c in table.columns} for row in table.rows]
            doc.update({k: _json_value(v) for k, v in table.summary.items()})
            return doc

        payload = as_dict(tables[0]) if len(tables) == 1 else {"tables": [as_dict(t) for t in tables]}
        return json.dumps(payload, indent=2, allow_nan=False) + "\n"

    def write(self, tables: Sequence[ResultTable]) -> None:
        text = self.render(tables)
        if self.out is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        path = Path(self.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
