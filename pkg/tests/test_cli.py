"""End-to-end tests of the command-line interface."""

import json
import math

import numpy as np

from quivex import FiniteFieldRep, make_kronecker
from quivex.cli import run

K3_TEXT = "vertices 2\n1 -> 2\n1 -> 2\n1 -> 2\n"


def _run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_epsilon_k(capsys):
    code, payload = _run_json(capsys, ["epsilon", "--k", "2"])
    assert code == 0
    assert payload["command"] == "epsilon"
    assert payload["exact"] == {"p": 3, "q": -1, "n": 5, "r": 2}
    assert payload["approx"] == "0.381966011250"
    exact = payload["exact"]
    value = (exact["p"] + exact["q"] * math.sqrt(exact["n"])) / exact["r"]
    assert abs(value - float(payload["approx"])) < 1e-9


def test_epsilon_m_alpha_delta(capsys):
    code, payload = _run_json(
        capsys, ["epsilon", "--m", "4", "--alpha", "2", "--delta", "1/2"]
    )
    assert code == 0
    assert payload["exact"] == {"p": 1, "q": 0, "n": 0, "r": 2}


def test_epsilon_precondition_exit_2(capsys):
    code = run(["epsilon", "--m", "2", "--alpha", "1", "--delta", "1/2"])
    captured = capsys.readouterr()
    assert code == 2
    assert "alpha" in captured.err


def test_epsilon_flag_conflicts(capsys):
    assert run(["epsilon", "--k", "2", "--m", "3"]) == 2
    assert run(["epsilon", "--m", "3"]) == 2
    capsys.readouterr()


def test_embed_kronecker(capsys):
    code, payload = _run_json(
        capsys, ["embed", "--kronecker", "2", "--e", "1,0", "--d", "1,1"]
    )
    assert code == 0
    assert payload["result"] == {"embeds": False}


def test_embed_quiver_file(capsys, tmp_path):
    path = tmp_path / "k3.quiver"
    path.write_text(K3_TEXT, encoding="utf-8")
    code, payload = _run_json(
        capsys, ["embed", "--quiver", str(path), "--e", "1,2", "--d", "2,2"]
    )
    assert code == 0
    assert payload["result"] == {"embeds": True}


def test_subdims(capsys):
    code, payload = _run_json(capsys, ["subdims", "--kronecker", "2", "--d", "1,1"])
    assert code == 0
    assert payload["result"]["subdims"] == [[0, 0], [0, 1], [1, 1]]


def test_exists_and_violating_vector(capsys):
    code, payload = _run_json(
        capsys,
        ["exists", "--m", "3", "--d", "10,10", "--delta", "1/2", "--epsilon", "1/2"],
    )
    assert code == 0
    assert payload["result"] == {"exists": False, "violating_e": [5, 7]}
    code, payload = _run_json(
        capsys,
        ["exists", "--m", "3", "--d", "2,2", "--delta", "1/2", "--epsilon", "38/100"],
    )
    assert code == 0
    assert payload["result"] == {"exists": True, "violating_e": None}


def test_exists_uniform(capsys):
    code, payload = _run_json(
        capsys,
        ["exists-uniform", "--m", "3", "--alpha", "1", "--delta", "1/2", "--epsilon", "2/5"],
    )
    assert code == 0
    assert payload["result"] == {"exists": False}


def test_counterexample(capsys):
    code, payload = _run_json(capsys, ["counterexample"])
    assert code == 0
    assert payload["result"] == {
        "euler": 1,
        "embeds": False,
        "fundamental_domain": True,
    }


def test_verify(capsys, tmp_path):
    rep = FiniteFieldRep(
        2, make_kronecker(2), (2, 2), (np.eye(2, dtype=np.int64),) * 2
    )
    path = tmp_path / "rep.json"
    rep.save(path)
    code, payload = _run_json(
        capsys, ["verify", "--rep", str(path), "--delta", "1/2", "--epsilon", "1/10"]
    )
    assert code == 0
    assert payload["result"]["ok"] is False
    assert payload["result"]["witness"] == {"dim": 1, "basis": [[1, 0]]}


def test_verify_budget_exit_3(capsys, tmp_path):
    from quivex import random_rep

    rep = random_rep(make_kronecker(2), (12, 12), 5, 0)
    path = tmp_path / "big.json"
    rep.save(path)
    code = run(["verify", "--rep", str(path), "--delta", "1/2", "--epsilon", "1/2"])
    captured = capsys.readouterr()
    assert code == 3
    assert "budget" in captured.err


def test_sample_deterministic_output(capsys):
    argv = [
        "sample", "--kronecker", "3", "--d", "2,2", "--p", "101",
        "--seed", "0", "--count", "5", "--delta", "1/2", "--epsilon", "38/100",
    ]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert [s["seed"] for s in payload["result"]["samples"]] == [0, 1, 2, 3, 4]
    assert all("ok" in s for s in payload["result"]["samples"])


def test_sample_without_params(capsys):
    code, payload = _run_json(
        capsys,
        ["sample", "--kronecker", "2", "--d", "2,2", "--p", "5", "--seed", "3", "--count", "2"],
    )
    assert code == 0
    assert payload["result"]["samples"] == [{"seed": 3}, {"seed": 4}]
    assert run(["sample", "--kronecker", "2", "--d", "2,2", "--p", "5",
                "--seed", "0", "--count", "1", "--delta", "1/2"]) == 2
    capsys.readouterr()


def test_theta_scan(capsys, tmp_path):
    path = tmp_path / "k3.quiver"
    path.write_text(K3_TEXT, encoding="utf-8")
    code, payload = _run_json(
        capsys,
        ["theta-scan", "--quiver", str(path), "--theta", "1,-1", "--delta", "1/2", "--dmax", "4"],
    )
    assert code == 0
    assert payload["result"]["rows"] == [
        {"d": [1, 1], "epsilon_sup": "1"},
        {"d": [2, 2], "epsilon_sup": "1"},
        {"d": [3, 3], "epsilon_sup": "1/3"},
        {"d": [4, 4], "epsilon_sup": "1/3"},
    ]


def test_theta_scan_rational_weights_scale_jointly(capsys):
    code, payload = _run_json(
        capsys,
        ["theta-scan", "--kronecker", "3", "--theta", "1/2,-1/2", "--delta", "1/2", "--dmax", "2"],
    )
    assert code == 0
    assert payload["result"]["rows"] == [
        {"d": [1, 1], "epsilon_sup": "1/2"},
        {"d": [2, 2], "epsilon_sup": "1/2"},
    ]


def test_curve_csv_equals_json_rows(capsys):
    assert run(["curve", "--m", "3", "--d", "2,2", "--format", "csv"]) == 0
    csv_out = capsys.readouterr().out
    lines = csv_out.strip().splitlines()
    assert lines[0] == "x,c_exact,c_approx,c_ceil"
    code, payload = _run_json(capsys, ["curve", "--m", "3", "--d", "2,2"])
    assert code == 0
    rows = payload["result"]["rows"]
    assert len(rows) == len(lines) - 1
    for row, line in zip(rows, lines[1:]):
        assert line == f"{row['x']},{row['c_exact']},{row['c_approx']},{row['c_ceil']}"
    assert rows[1] == {
        "x": 1,
        "c_exact": "(5-sqrt(5))/2",
        "c_approx": "1.38196601125",
        "c_ceil": 2,
    }


def test_curve_refuses_positive_form(capsys):
    assert run(["curve", "--m", "3", "--d", "5,1"]) == 2
    capsys.readouterr()


def test_input_errors_exit_2(capsys):
    assert run(["exists", "--m", "3", "--d", "2,2", "--delta", "0.5", "--epsilon", "1/2"]) == 2
    assert run(["embed", "--kronecker", "2", "--e", "1,x", "--d", "1,1"]) == 2
    assert run(["embed", "--e", "1,0", "--d", "1,1"]) == 2
    assert run(["embed", "--quiver", "/nonexistent.quiver", "--e", "1", "--d", "1"]) == 2
    assert run(["embed", "--quiver", "x", "--kronecker", "2", "--e", "1,0", "--d", "1,1"]) == 2
    assert run(["no-such-command"]) == 2
    assert run(["epsilon", "--k", "2", "--bogus"]) == 2
    capsys.readouterr()


def test_output_reparses_as_json(capsys):
    for argv in (
        ["epsilon", "--k", "3"],
        ["counterexample"],
        ["subdims", "--kronecker", "3", "--d", "2,2"],
    ):
        assert run(argv) == 0
        json.loads(capsys.readouterr().out)
