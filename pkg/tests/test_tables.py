"""
Tests for CSV/JSON table rendering.
"""

import json

import pytest

from src.means import Verdict
from src.reporting import ResultTable, TableWriter, format_cell, summary_line


def sweep_table():
    table = ResultTable(title="sweep", columns=("eps", "lower", "upper", "exact", "lattice_count"))
    table.add_row(eps=0.5, lower=0.1, upper=2 / 3, exact=True, lattice_count=4)
    table.add_row(eps=0.25, lower=0.5, upper=0.5, exact=False)
    table.summary = {"verdict": Verdict.HAS_MEAN, "estimate": 0.5}
    return table


@pytest.mark.parametrize("value, text", [
    (None, ""),
    (True, "true"),
    (False, "false"),
    (0.1, "0.10000000000000001"),
    (0.5, "0.5"),
    (3, "3"),
    ((0, 2, 4), "0 2 4"),
    (Verdict.NO_MEAN, "NoMean"),
])
def test_format_cell(value, text):
    assert format_cell(value) == text


def test_summary_line():
    assert summary_line({"verdict": Verdict.HAS_MEAN, "estimate": 0.5}) == "HasMean estimate=0.5"
    assert summary_line({"verdict": Verdict.NO_MEAN, "estimate": None}) == "NoMean"
    assert summary_line({"count": 4}) == "count=4"


def test_csv_rendering():
    text = TableWriter("csv").render([sweep_table()])
    assert text.splitlines() == [
        "eps,lower,upper,exact,lattice_count",
        "0.5,0.10000000000000001,0.66666666666666663,true,4",
        "0.25,0.5,0.5,false,",
        "HasMean estimate=0.5",
    ]


def test_csv_with_several_tables():
    second = ResultTable(title="lattices", columns=("index", "members"))
    second.add_row(index=0, members=[0, 3])
    text = TableWriter("csv").render([sweep_table(), second])
    lines = text.splitlines()
    assert lines[0] == "# sweep"
    assert "" in lines
    assert lines[lines.index("") + 1] == "# lattices"
    assert lines[-1] == "0,0 3"


def test_json_mirrors_csv():
    doc = json.loads(TableWriter("json").render([sweep_table()]))
    assert doc["title"] == "sweep"
    assert doc["columns"] == ["eps", "lower", "upper", "exact", "lattice_count"]
    assert doc["rows"][0] == {"eps": 0.5, "lower": 0.1, "upper": 2 / 3, "exact": True, "lattice_count": 4}
    assert doc["rows"][1]["lattice_count"] is None
    assert doc["verdict"] == "HasMean"
    assert doc["estimate"] == 0.5

    several = json.loads(TableWriter("json").render([sweep_table(), sweep_table()]))
    assert len(several["tables"]) == 2


def test_unknown_column_and_format():
    with pytest.raises(KeyError):
        sweep_table().add_row(gap=1.0)
    with pytest.raises(ValueError):
        TableWriter("xml")


def test_write_to_file_is_deterministic(tmp_path):
    first, second = tmp_path / "a" / "out.csv", tmp_path / "b" / "out.csv"
    TableWriter("csv", first).write([sweep_table()])
    TableWriter("csv", second).write([sweep_table()])
    assert first.read_bytes() == second.read_bytes()


def test_write_to_stdout(capsys):
    TableWriter("json").write([sweep_table()])
    assert json.loads(capsys.readouterr().out)["verdict"] == "HasMean"
