import json
import subprocess
import sys

import pytest

from bmwtrace.cli import main, run
from bmwtrace.ring import DELTA_H, RingElement, from_text


def json_result(argv):
    result = run(["--format", "json"] + argv)
    return result.exit_code, json.loads(result.render())


def test_unknot_invariant():
    code, data = json_result(["invariant", "--trace", "homfly", "1:"])
    assert code == 0
    assert data["command"] == "invariant"
    assert RingElement.from_json(data["result"]) == DELTA_H
    assert from_text(data["result"]["text"]) == DELTA_H


def test_basis_listing():
    code, data = json_result(["basis", "--bmw", "3"])
    assert code == 0 and data["result"]["count"] == 15
    assert data["result"]["words"][0] == "./."
    code, data = json_result(["basis", "--hecke", "4"])
    assert data["result"]["count"] == 24


def test_transverse_trace_output():
    code, data = json_result(["trace", "--trace", "transverse", "2: -1"])
    assert code == 0
    assert data["result"] == {"beta": "-q^-1 + q", "alpha": {"1": "a", "2": "q^-1 - q"}}
    code, data = json_result(["trace", "--trace", "transverse", "--hecke", "2: -1"])
    assert data["result"] == {"beta": "0", "alpha": {"1": "a", "2": "q^-1 - q"}}


def test_basic_trace_and_reduce():
    assert run(["trace", "--trace", "basic=1", "2: -1"]).render() == "a"
    assert run(["reduce", "2: e1"]).render().splitlines() == [".\t1", "x1\t1/z", "y1\t-1/z"]
    assert run(["reduce", "--hecke", "2: e1"]).render() == "0"


def test_text_and_json_carry_same_value():
    text = run(["invariant", "--trace", "kauffman", "3: 1 -2 1 -2"]).render()
    _, data = json_result(["invariant", "--trace", "kauffman", "3: 1 -2 1 -2"])
    assert text == data["result"]["text"]
    assert from_text(text) == RingElement.from_json(data["result"])


def test_output_is_deterministic():
    argv = ["--format", "json", "reduce", "3: 1 e2 -1 2 e1"]
    assert run(argv).render() == run(argv).render()


def test_oracle_and_mfw():
    assert run(["oracle", "2: 1 1 1"]).render() == run(["invariant", "2: 1 1 1"]).render()
    code, data = json_result(["mfw", "2: -1"])
    assert code == 0
    assert data["result"]["d"] == -2 and data["result"]["holds"]


@pytest.mark.parametrize(
    "argv",
    [["invariant", "3: 4"], ["invariant", "2: e1"], ["reduce", "3 1"], ["basis", "--bmw", "0"], ["mfw", "2: e1"]],
)
def test_parse_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_budget_exit_3():
    assert main(["--budget", "5", "invariant", "--trace", "kauffman", "4: 1 2 3 -1 2 -3 2 1"]) == 3
    assert main(["--budget", "5", "oracle", "--trace", "kauffman", "4: 1 2 3 -1 2 -3 2 1 3"]) == 3


def test_usage_error_exit_code():
    assert main(["nonsense"]) == 2


def test_verify_quick_passes_and_fault_is_reported():
    result = run(["verify", "quick"])
    assert result.exit_code == 0
    assert all(line.startswith("PASS") for line in result.text)
    broken = run(["verify", "quick", "--break-relation", "BMW4"])
    assert broken.exit_code == 1
    report = broken.render()
    assert "FAIL BMW relations" in report and "BMW4[1]" in report


def test_console_script_runs():
    out = subprocess.run(
        [sys.executable, "-m", "bmwtrace.cli", "invariant", "2: 1"], capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "(-a^-1 + a)/z"
