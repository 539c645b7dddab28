import json
import subprocess
import sys

import pytest

from conftest import DATA, P2, SQUARE, cx_of
from momentcx import cli, io
from momentcx.errors import InputError
from momentcx.measures import LITERAL, NORMALIZED, enumerate_measures
from momentcx.moment_complex import build_complex


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def machine(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "machine")
    return code, json.loads(out), err


# -- configuration parsing -----------------------------------------------------

def test_config_errors_are_position_annotated():
    with pytest.raises(InputError, match=r"^\$\.rank: expected an integer"):
        io.loads_config('{"rank": "two", "weights": []}')
    with pytest.raises(InputError, match=r"\$\.weights\[1\]\.chi\[0\]"):
        io.loads_config('{"rank": 1, "weights": [{"chi": [0]}, {"chi": [0.5]}]}')
    with pytest.raises(InputError, match=r"\$\.weights\[0\]\.mult"):
        io.loads_config('{"rank": 1, "weights": [{"chi": [0], "mult": 0}]}')
    with pytest.raises(InputError, match=r"\$\.weights\[0\]\.chi: has length 2"):
        io.loads_config('{"rank": 1, "weights": [{"chi": [0, 1]}]}')
    with pytest.raises(InputError, match="merge"):
        io.loads_config('{"rank": 1, "weights": [{"chi": [0]}, {"chi": [0]}]}')
    with pytest.raises(InputError, match="line 1 column"):
        io.loads_config('{"rank": 1,')
    with pytest.raises(InputError, match=r"\$\.limits\.maxBogus"):
        io.loads_config('{"rank": 1, "weights": [{"chi": [0]}], "limits": {"maxBogus": 1}}')


def test_config_order_and_digest():
    a, _, _ = io.loads_config('{"rank": 1, "weights": [{"chi": [2]}, {"chi": [0]}, {"chi": [1]}]}')
    b, _, _ = io.load_config(DATA / "p2.json")
    assert a == b and io.digest(a) == io.digest(b)


def test_abstract_cells_use_file_indices():
    cfg, _, (cells, generic) = io.loads_config(
        '{"rank": 1, "weights": [{"chi": [2]}, {"chi": [0]}], "cells": [[1], [0, 1]]}')
    assert cells == [(0,), (0, 1)]


# -- round trips ---------------------------------------------------------------

@pytest.mark.parametrize("name", ["p1", "p2", "p3", "square", "multiplicity"])
def test_complex_round_trip(capsys, name):
    code, report, _ = machine(capsys, "complex", DATA / f"{name}.json")
    assert code == 0 and report["status"] == 0
    cfg, _, _ = io.load_config(DATA / f"{name}.json")
    assert io.complex_from_dict(report["payload"]["complex"]) == build_complex(cfg)
    assert report["digest"] == io.digest(cfg)


@pytest.mark.parametrize("name", ["p1", "p2", "square"])
@pytest.mark.parametrize("mode", ["literal", "additive", "normalized"])
def test_measures_round_trip(capsys, name, mode):
    code, report, _ = machine(capsys, "measures", DATA / f"{name}.json", "--mode", mode)
    assert code == 0
    cx = io.complex_from_dict(machine(capsys, "complex", DATA / f"{name}.json")[1]["payload"]["complex"])
    assert io.measures_from_dict(report["payload"]["measures"], cx) == enumerate_measures(cx, mode)


def test_machine_output_is_stable(capsys):
    first = run(capsys, "measures", DATA / "square.json", "--format", "machine")
    second = run(capsys, "measures", DATA / "square.json", "--format", "machine")
    assert first == second


# -- commands ------------------------------------------------------------------

def test_complex_table(capsys):
    code, out, _ = run(capsys, "complex", DATA / "p2.json")
    assert code == 0
    assert "cells: 6" in out and "split {0,2}: maximal {0,1} {1,2}; internal {1}" in out
    code, report, _ = machine(capsys, "complex", DATA / "p1.json")
    assert len(report["payload"]["complex"]["cells"]) == 3


def test_measures_counts(capsys):
    _, report, _ = machine(capsys, "measures", DATA / "p1.json")
    assert (report["payload"]["measures"]["count"], report["payload"]["measures"]["geometricCount"]) == (3, 1)
    _, report, _ = machine(capsys, "measures", DATA / "p2.json")
    assert (report["payload"]["measures"]["count"], report["payload"]["measures"]["geometricCount"]) == (5, 2)
    _, report, _ = machine(capsys, "measures", DATA / "p2.json", "--geometric")
    assert report["payload"]["measures"]["count"] == 2


def test_literal_mode_warns(capsys):
    code, report, err = machine(capsys, "measures", DATA / "p2.json", "--mode", "literal")
    assert code == 0 and report["payload"]["measures"]["count"] > 5
    assert "mode discrepancy" in err and report["payload"]["warnings"]


def test_classify(capsys):
    code, report, _ = machine(capsys, "classify", DATA / "p2.json", "--cells", "{1}", "{0,2}")
    assert code == 0
    p = report["payload"]
    assert len(p["supports"]) == 5 and p["open"]
    assert sorted(p["fibers"]) == ["{0,2}", "{1}"]
    code, report, _ = machine(capsys, "classify", DATA / "p2.json", "--cells", "{0,2}")
    assert code == 1 and report["payload"]["violations"]
    code, report, _ = machine(capsys, "classify", DATA / "p1.json", "--cells", "0,1")
    assert code == 0 and report["payload"]["supports"] == [[0, 1]] and report["payload"]["geometric"]
    code, report, _ = machine(capsys, "classify", DATA / "p2.json", "--measure-id", "1")
    assert code == 0 and report["payload"]["cells"] == [[1], [0, 2]]
    code, _, _ = run(capsys, "classify", DATA / "p2.json", "--measure-id", "99")
    assert code == 2


def test_git(capsys):
    code, report, _ = machine(capsys, "git", DATA / "p2.json", "--chi", "1/2")
    assert code == 0 and report["payload"]["cells"] == [[0, 1], [0, 2]]
    assert report["payload"]["valid"] and report["payload"]["geometric"]
    assert report["payload"]["chi"] == ["1/2"]
    code, report, err = machine(capsys, "git", DATA / "p2.json", "--chi", "1")
    assert code == 1 and report["payload"]["wall"] == [1] and "{1}" in err
    code, report, _ = machine(capsys, "git", DATA / "square.json", "--chi", "1/3,1/2")
    cells = report["payload"]["cells"]
    assert code == 0 and [0, 1, 2, 3] in cells and len(cells) == 3
    code, _, _ = run(capsys, "git", DATA / "p2.json", "--chi", "x")
    assert code == 2


def test_class(capsys):
    code, report, _ = machine(capsys, "class", DATA / "p2.json", "--cell", "{0,2}")
    assert code == 0 and report["payload"]["fingerprint"] == ["2*x1", "0", "-2*x1"]
    code, report, _ = machine(capsys, "class", "--cone", "{1}", "--phi", "{1:1, 2:1}")
    assert code == 0 and report["payload"]["class"] == "2*x1"
    code, report, _ = machine(capsys, "class", "--cone", "{(1,0),(0,1)}",
                              "--phi", "{(1,0):1, (0,1):1, (1,1):1}")
    assert report["payload"]["class"] == "x1 + x2"
    code, report, _ = machine(capsys, "class", DATA / "p2.json", "--support", "0,1,2")
    assert report["payload"]["cell"] == [0, 2]
    code, _, _ = run(capsys, "class", DATA / "p2.json", "--cell", "0,1,2")
    assert code == 2
    code, _, _ = run(capsys, "class", "--cone", "{1,-1}", "--phi", "{1:1, -1:1}")
    assert code == 1


@pytest.mark.parametrize("name", ["p1", "p2", "square", "multiplicity"])
def test_verify_passes(capsys, name):
    code, out, _ = run(capsys, "verify", DATA / f"{name}.json")
    assert code == 0 and "FAIL" not in out and out.count("PASS") == 7


# -- exit codes ----------------------------------------------------------------

@pytest.mark.parametrize("name", ["bad_rank", "duplicate", "bad_json"])
def test_malformed_configs_exit_two(capsys, name):
    code, _, err = run(capsys, "complex", DATA / f"{name}.json")
    assert code == 2 and err.startswith("error:")


def test_missing_file_and_bad_arguments(capsys):
    assert run(capsys, "complex", DATA / "missing.json")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "measures", DATA / "p2.json", "--mode", "strict")[0] == 2


def test_resource_limits_exit_three(capsys):
    assert run(capsys, "complex", DATA / "tight_limits.json")[0] == 3
    assert run(capsys, "measures", DATA / "square.json", "--limit-cells", "5")[0] == 3
    assert run(capsys, "--limit-points", "3", "complex", DATA / "p3.json")[0] == 3


def test_env_limit(capsys, monkeypatch):
    monkeypatch.setenv("MOMENTCX_LIMIT_CELLS", "5")
    assert run(capsys, "measures", DATA / "square.json")[0] == 3


def test_verify_fails_on_unrealizable_abstract_complex(capsys):
    code, out, _ = run(capsys, "verify", DATA / "abstract.json")
    assert code == 1
    assert "FAIL  support families distinct" in out and '"first"' in out


def test_abstract_mode(capsys):
    code, report, _ = machine(capsys, "complex", DATA / "abstract.json")
    assert code == 0 and report["payload"]["complex"]["abstract"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "momentcx", "class", "--cone", "{1}",
                           "--phi", "{1:1, 2:1}"], capture_output=True, text=True)
    assert proc.returncode == 0 and "2*x1" in proc.stdout
