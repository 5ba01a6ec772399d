"""Command-line interface: golden outputs, exit codes, determinism."""

import json
import pathlib

import pytest

from arcalg.cli import main

DATA = pathlib.Path(__file__).parent / "data"

WORKED_X = json.dumps({
    "lower": {"cups": [[2, 3], [4, 5]],
              "block": {"m": 2, "n": 2, "crosses": [], "circles": [],
                        "defect": 2}},
    "weight": {"m": 2, "n": 2, "labels": {"2": "v", "4": "v"}},
    "upper": {"caps": [[2, 5], [3, 4]],
              "block": {"m": 2, "n": 2, "crosses": [], "circles": [],
                        "defect": 2}},
    "degree": 1,
})
WORKED_Y = json.dumps({
    "lower": {"cups": [[2, 5], [3, 4]],
              "block": {"m": 2, "n": 2, "crosses": [], "circles": [],
                        "defect": 2}},
    "weight": {"m": 2, "n": 2, "labels": {"2": "v", "4": "v"}},
    "upper": {"caps": [[1, 2], [4, 5]],
              "block": {"m": 2, "n": 2, "crosses": [], "circles": [],
                        "defect": 2}},
    "degree": 2,
})


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def golden(name):
    return (DATA / name).read_text()


def test_dict_golden(capsys):
    code, out, _ = run(capsys, "dict", "--m", "2", "--n", "1",
                       "--coeffs", "0,0,-3")
    assert code == 0
    assert out == golden("dict_2_1.json")


def test_dict_inverse(capsys):
    weight = json.dumps({"m": 2, "n": 1,
                         "labels": {"-1": "x", "0": "x", "2": "o"}})
    code, out, _ = run(capsys, "dict", "--m", "2", "--n", "1",
                       "--weight", weight)
    assert code == 0
    assert json.loads(out)["coeffs"] == [0, 0, -3]


def test_block_golden(capsys):
    code, out, _ = run(capsys, "block", "--m", "1", "--n", "1",
                       "--p", "0", "--q", "0", "--hasse")
    assert code == 0
    assert out == golden("block_1_1_hasse.json")


def test_crystal_golden(capsys):
    code, out, _ = run(capsys, "crystal", "--m", "1", "--n", "1",
                       "--p", "0", "--q", "1")
    assert code == 0
    assert out == golden("crystal_1_1.dot")


def test_cartan_goldens(capsys):
    code, out, _ = run(capsys, "cartan", "--m", "1", "--n", "1",
                       "--p", "0", "--q", "0", "--format", "csv")
    assert code == 0
    assert out == golden("cartan_1_1_00.csv")
    code, out, _ = run(capsys, "cartan", "--m", "1", "--n", "1",
                       "--p", "0", "--q", "1")
    assert code == 0
    assert out == golden("cartan_1_1_01.json")


def test_mult_worked_example(capsys):
    code, out, _ = run(capsys, "mult", "--x", WORKED_X, "--y", WORKED_Y,
                       "--trace")
    assert code == 0
    data = json.loads(out)
    assert data["trace"] == ["merge:1*y->y", "split:y->x*y"]
    assert len(data["terms"]) == 1
    term = data["terms"][0]
    assert term["coeff"] == 1
    assert term["vector"]["weight"]["labels"] == {"2": "v", "5": "v"}


def test_render(capsys):
    code, out, _ = run(capsys, "render", "--vector", WORKED_X)
    assert code == 0
    assert out == "(())\nv^v^\n()()\n"


def test_deterministic_output(capsys):
    outs = set()
    for _ in range(3):
        _, out, _ = run(capsys, "decomp", "--m", "2", "--n", "1",
                        "--p", "0", "--q", "1")
        outs.add(out)
    assert len(outs) == 1


def test_domain_error_exit_code(capsys):
    code, out, err = run(capsys, "dict", "--m", "1", "--n", "1",
                         "--coeffs", "5")
    assert code == 1
    assert out == ""
    assert "error" in json.loads(err)


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["block", "--m", "1", "--n", "1"])  # missing -p/-q
    assert exc.value.code == 2


def test_xcheck(capsys):
    code, out, _ = run(capsys, "xcheck", "--m", "1", "--n", "1",
                       "--p", "0", "--q", "1", "--d", "1", "--which", "all")
    assert code == 0
    assert json.loads(out) == {"dec": True, "cog": True}
