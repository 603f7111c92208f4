import json
import subprocess
import sys

import pytest

from classforge.cli import dispatch


def run(argv, capsys):
    code, report = dispatch(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate(capsys):
    code, out, _ = run(["generate", "--n", "3", "--case", "5mod8"], capsys)
    assert code == 0
    data = json.loads(out)
    cert = data["results"]["certificate"]
    assert cert["valid"] is True
    assert int(cert["d"]) % 3 == 0
    assert all(v["status"] == "PASS" for v in data["verdicts"])
    assert "elapsed_ms" not in data


def test_verify_worked_example(capsys):
    code, out, _ = run(["verify", "--a", "5", "--b", "7", "--n", "3"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["results"]["certificate"]["d"] == "-1347"
    assert "order 3" in data["results"]["conclusion"]


def test_verify_invalid_certificate_exits_1(capsys):
    code, out, _ = run(["verify", "--a", "1", "--b", "1", "--n", "3"], capsys)
    assert code == 1
    statuses = {v["claim"]: v["status"] for v in json.loads(out)["verdicts"]}
    assert statuses["b_not_unit"] == "FAIL"


@pytest.mark.parametrize("argv", [
    ["verify", "--a", "3", "--b", "1", "--n", "3"],
    ["verify", "--a", "5", "--b", "7", "--n", "4"],
    ["classgroup", "--disc", "-22"],
    ["classgroup", "--disc", "16"],
    ["generate", "--n", "3", "--case", "1mod8"],
    ["frobnicate"],
    ["r3"],
])
def test_usage_and_input_errors_exit_2(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert out == ""
    assert err


def test_classgroup(capsys):
    _, out, _ = run(["classgroup", "--disc", "-3299"], capsys)
    assert json.loads(out)["results"]["elementary_divisors"] == ["3", "9"]
    _, out, _ = run(["classgroup", "--disc", "229"], capsys)
    data = json.loads(out)["results"]
    assert data["narrow"] is True and data["h"] == "3"


def test_r3_and_hurwitz(capsys):
    code, out, _ = run(["r3", "--n-value", "1347"], capsys)
    data = json.loads(out)
    assert code == 0 and data["results"] == {"brute": "144", "gauss": "144"}
    _, out, _ = run(["hurwitz", "--n-value", "12"], capsys)
    data = json.loads(out)
    assert data["results"]["value"] == "4/3"
    assert data["verdicts"][0]["status"] == "PASS"


def test_divisibility_and_search(capsys):
    code, out, _ = run(["divisibility", "--n-value", "1347", "--n", "3"], capsys)
    assert code == 0
    code, out, _ = run(["search", "--n", "3", "--case", "5mod8", "--a-max", "20", "--b-max", "50"], capsys)
    pairs = {(c["a"], c["b"]) for c in json.loads(out)["results"]["certificates"]}
    assert ("5", "7") in pairs


def test_scholz_reports_refutation(capsys):
    code, out, _ = run(["scholz", "--dprime", "-1347"], capsys)
    data = json.loads(out)
    assert data["results"]["verdict"] == "REFUTED"
    assert data["results"]["rank3_real"] == "0"
    assert code == 1


def test_tsv_format(capsys):
    _, out, _ = run(["verify", "--a", "5", "--b", "7", "--n", "3", "--format", "tsv"], capsys)
    lines = out.splitlines()
    assert lines[0] == "section\tkey\tvalue"
    assert "results\tcertificate.d\t-1347" in lines
    assert "verdict\tidentity_holds\tPASS" in lines


def test_timing_flag(capsys):
    _, out, _ = run(["r3", "--n-value", "3", "--timing"], capsys)
    assert "elapsed_ms" in json.loads(out)


def test_examples_skip_slow(capsys):
    code, out, _ = run(["examples", "--skip-slow"], capsys)
    data = json.loads(out)
    status = {v["claim"]: v["status"] for v in data["verdicts"]}
    assert status["n=3 (5, 7): 72 | r(1347)"] == "PASS"
    assert status["n=7 (9, 8): 7 | h(-8388527)"] == "PASS"
    assert status["n=7 (9, 8): -8388527 = 5 mod 8"] == "FAIL"
    assert status["n=5 (16, 29): r(20511085) brute force = Gauss"] == "SKIPPED"
    assert code == 1


def test_console_script_is_deterministic():
    cmd = [sys.executable, "-m", "classforge.cli", "classgroup", "--disc", "-665304"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["results"]["h"] == "480"
