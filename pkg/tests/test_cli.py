from __future__ import annotations

import json

import pytest

from equipart.cli import main, parse_parts
from equipart.errors import ParseError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("text", ["3,5,6", "3, 5 ,6", " 3,5,6 "])
def test_parse_parts(text):
    assert list(parse_parts(text)) == [3, 5, 6]


@pytest.mark.parametrize("text", ["", "3,0,6", "3,-1", "3,x", "3,,4", "2.5"])
def test_parse_parts_errors(text):
    with pytest.raises(ParseError):
        parse_parts(text)


def test_threshold_json(capsys):
    code, out, _ = run(capsys, "threshold", "3,3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"parts", "s_star", "h", "reason", "chi_star"}
    assert doc == {
        "parts": [3, 3],
        "s_star": 2,
        "h": 2,
        "reason": {"kind": "TWO_NONDIVISIBLE", "witnesses": [0, 1]},
        "chi_star": 4,
    }


def test_threshold_text(capsys):
    code, out, _ = run(capsys, "threshold", "5,6")
    assert code == 0
    assert out == "parts: 5,6\ns*: 2\nh: 3 (NO_Q_PARTITION, witnesses 0)\nchi*: 4\n"


def test_color(capsys):
    code, out, _ = run(capsys, "color", "5,6", "--k", "3")
    assert (code, out) == (1, "infeasible\n")
    code, out, _ = run(capsys, "color", "5,6", "--k", "5", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["classes"] == [[2, 3], [2, 2, 2]]
    assert doc["colors"] == [[1, 1, 2, 2, 2], [3, 3, 4, 4, 5, 5]]


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "3,3", "--format", "json")
    assert code == 0
    rows = {r["k"]: r["feasible"] for r in json.loads(out)["rows"]}
    assert rows == {1: False, 2: True, 3: False, 4: True, 5: True, 6: True}
    code, out, _ = run(capsys, "sweep", "3,3", "--max-k", "8")
    assert out.splitlines()[2] == "3\tinfeasible" and len(out.splitlines()) == 8


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "1,2,3", "--max-k", "10")
    assert (code, out) == (0, "agreement for all k\n")


def test_verify_budget(capsys):
    code, _, err = run(capsys, "verify", "40,40")
    assert code == 64 and "budget" in err


def test_partition_worked_example(capsys):
    code, out, _ = run(capsys, "partition", "8", "--q", "2")
    assert code == 0
    assert out == "minimal 2-partition of 8: 2 + 3 + 3\nmaximal 2-partition of 8: 2 + 2 + 2 + 2\n"
    code, out, _ = run(capsys, "partition", "5", "--q", "3")
    assert (code, out) == (1, "no 3-partition of 5\n")


def test_bench_small(capsys):
    code, out, _ = run(capsys, "bench", "--max-l", "4000", "--steps", "3", "--format", "json")
    assert code == 0
    assert [r["l"] for r in json.loads(out)["rows"]] == [1000, 2000, 4000]


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["threshold"],
        ["color", "3,3"],
        ["color", "3,3", "--k", "0"],
        ["threshold", "3,0"],
        ["threshold", "5"],
        ["nonsense", "1,2"],
        ["threshold", "3,3", "--format", "xml"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 64 and out == "" and err
