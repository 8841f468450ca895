"""
End-to-end tests of the command-line front end.
"""

import json

import pytest

from src.main import EXIT_CAP, EXIT_INVALID, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, main


def write(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def e5_doc(tmp_path):
    return write(tmp_path / "e5.json", {"points": [{"coords": [x]} for x in (0.0, 0.25, 0.5, 0.75, 1.0)]})


@pytest.fixture
def interleaved_doc(tmp_path):
    return write(tmp_path / "interleaved.json", {"points": [{"coords": [j / 16]} for j in range(17)]})


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_space_validate_valid(capsys, e5_doc):
    code, out, _ = run(capsys, "space-validate", e5_doc)
    assert code == EXIT_OK
    assert out.splitlines() == ["kind,points,amount", "valid points=5 violations=0 warnings=0"]


def test_space_validate_reports_violations(capsys, tmp_path):
    path = write(tmp_path / "bad.json", {"metric": {"matrix": [[0, 1, 5], [1, 0, 1], [5, 1, 0]]}})
    code, out, _ = run(capsys, "space-validate", path)
    assert code == EXIT_INVALID
    assert "triangle,0 1 2,3" in out.splitlines()
    assert out.splitlines()[-1].startswith("invalid")


@pytest.mark.parametrize("content", [
    "{not json",
    json.dumps({"points": [{"coords": [0.0]}], "metric": "cosine"}),
    json.dumps({"metric": {"matrix": [[0, -1], [-1, 0]]}}),
])
def test_space_validate_parse_errors(capsys, tmp_path, content):
    path = tmp_path / "broken.json"
    path.write_text(content)
    code, _, err = run(capsys, "space-validate", str(path))
    assert code == EXIT_PARSE
    assert "error" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "space-validate", str(tmp_path / "absent.json"))
    assert code == EXIT_PARSE


@pytest.mark.parametrize("eps, rows", [("0.3", 4), ("0.2", 1), ("2.0", 5)])
def test_lattices(capsys, e5_doc, eps, rows):
    code, out, _ = run(capsys, "lattices", e5_doc, "--eps", eps)
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "index,size,members"
    assert len(lines) == rows + 2
    assert lines[-1] == f"count={rows}"


def test_lattices_listing(capsys, e5_doc):
    _, out, _ = run(capsys, "lattices", e5_doc, "--eps", "0.3")
    assert out.splitlines()[1:5] == ["0,3,0 2 4", "1,2,0 3", "2,2,1 3", "3,2,1 4"]


def test_lattices_cap_exceeded(capsys, e5_doc):
    code, out, err = run(capsys, "lattices", e5_doc, "--eps", "0.3", "--cap", "3")
    assert code == EXIT_CAP
    assert out == ""
    assert "more than 3 lattices (4 counted" in err


def test_sweep_constant(capsys, tmp_path, e5_doc):
    f = write(tmp_path / "c.json", {"type": "constant", "value": 3.5})
    code, out, _ = run(capsys, "sweep", e5_doc, f)
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "eps,lower,upper,gap,exact,lattice_count,min_lattice_size"
    assert len(lines) == 10
    assert lines[-1] == "HasMean estimate=3.5"


def test_sweep_no_mean(capsys, tmp_path, interleaved_doc):
    f = write(tmp_path / "chi.json", {"type": "indicator", "ids": list(range(0, 17, 2))})
    code, out, _ = run(capsys, "sweep", interleaved_doc, f, "--eps0", "0.125", "--ratio", "0.9", "--steps", "3")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "NoMean"


def test_sweep_json_and_out_file(capsys, tmp_path, e5_doc):
    f = write(tmp_path / "x.json", {"type": "coordinate", "axis": 0})
    outputs = []
    for name in ("first.json", "second.json"):
        target = tmp_path / name
        code, out, _ = run(capsys, "sweep", e5_doc, f, "--format", "json", "--out", str(target), "--steps", "4",
                             "--stable-steps", "2")
        assert code == EXIT_OK
        assert out == ""
        outputs.append(target.read_bytes())
    assert outputs[0] == outputs[1]
    doc = json.loads(outputs[0])
    assert doc["verdict"] == "HasMean"
    assert doc["estimate"] == 0.5
    assert [row["eps"] for row in doc["rows"]] == [1.0, 0.5, 0.25, 0.125]


def test_sweep_partial_function(capsys, tmp_path, e5_doc):
    f = write(tmp_path / "t.json", {"type": "table", "values": [1.0, 2.0]})
    code, _, _ = run(capsys, "sweep", e5_doc, f)
    assert code == EXIT_PARSE


def test_measure_set_against_itself(capsys, tmp_path, e5_doc):
    region = write(tmp_path / "a.json", {"type": "ids", "ids": [1, 2, 3]})
    superset = write(tmp_path / "k.json", {"type": "box", "lower": [0.0], "upper": [0.75]})
    code, out, _ = run(capsys, "measure", e5_doc, region, region, "--superset", superset, "--format", "json")
    assert code == EXIT_OK
    tables = json.loads(out)["tables"]
    assert [t["title"] for t in tables] == [
        "relative_measure", "thin_boundary K0 (5 points)", "thin_boundary K1 (4 points)", "summary",
    ]
    assert tables[0]["verdict"] == "HasMean"
    assert tables[0]["value"] == 1.0
    assert tables[-1]["rows"] == [
        {"quantity": "relative_measure", "verdict": "HasMean", "value": 1.0},
        {"quantity": "thin_boundary", "verdict": "ThinBoundary", "value": 1.0},
    ]


def test_measure_requires_a_inside_b(capsys, tmp_path, e5_doc):
    a = write(tmp_path / "a.json", {"type": "ids", "ids": [0, 4]})
    b = write(tmp_path / "b.json", {"type": "box", "lower": [0.0], "upper": [0.5]})
    code, _, err = run(capsys, "measure", e5_doc, a, b)
    assert code == EXIT_PRECONDITION
    assert "not a subset" in err


def test_verify_small_run(capsys):
    code, out, _ = run(capsys, "verify", "--seed", "4", "--instances", "3", "--max-points", "5")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "check,reproducer,message"
    assert lines[-1].startswith("passed checks=31 failures=0")


def test_negative_seed_is_folded_to_unsigned(capsys, tmp_path, e5_doc):
    f = write(tmp_path / "x.json", {"type": "coordinate", "axis": 0})
    outputs = []
    for seed in ("-1", str(2**64 - 1)):
        code, out, _ = run(capsys, "sweep", e5_doc, f, "--steps", "3", "--cap", "1", "--seed", seed)
        assert code == EXIT_OK
        outputs.append(out)
    assert outputs[0] == outputs[1]
    assert ",false," in outputs[0]


def test_verify_accepts_negative_seed(capsys):
    code, out, _ = run(capsys, "verify", "--seed", "-3", "--instances", "2", "--max-points", "4")
    assert code == EXIT_OK
    assert out.splitlines()[-1].startswith("passed checks=21 failures=0")


def test_bad_flags_exit_through_argparse(capsys, e5_doc):
    with pytest.raises(SystemExit) as info:
        main(["lattices", e5_doc, "--eps", "-1"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main([])
