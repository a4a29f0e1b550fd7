import json
import subprocess
import sys

import pytest

from thetalift.cli import main

KEYS = {"command", "params", "conventions", "checks", "seed"}


def run_json(capsys, *argv):
    code = main(["--json", *argv])
    return code, json.loads(capsys.readouterr().out)


def test_orbit_report(capsys):
    code, rep = run_json(capsys, "orbit", "5", "4")
    assert code == 0
    assert KEYS <= rep.keys()
    assert rep["results"]["partition"] == [4]
    assert all(c["status"] == "pass" for c in rep["checks"])


def test_orbit_two_two(capsys):
    code, rep = run_json(capsys, "orbit", "3", "4")
    assert code == 0
    assert rep["results"] == {"partition": [2, 2], "orbit_dim": 6, "gk_dim": 3}


def test_orbit_rejects_odd_size(capsys):
    assert main(["orbit", "3", "5"]) == 2
    assert "error" in capsys.readouterr().err


def test_even_r_is_usage_error():
    assert main(["orbit", "4", "4"]) == 2


def test_dimeq(capsys):
    code, rep = run_json(capsys, "dimeq", "5", "3")
    assert code == 0
    assert rep["results"] == {"lhs": 46, "rhs": 46}


def test_exponents(capsys):
    code, rep = run_json(capsys, "exponents", "3", "4", "2")
    assert code == 0
    assert rep["results"]["ledger"] == 10 == rep["results"]["target"]
    assert rep["results"]["theta_equation_solutions"] == [2]


def test_cocycle_value(capsys):
    code, rep = run_json(capsys, "cocycle", "--p", "7", "--r", "3", "--a", "7", "--b", "3")
    assert code == 0
    assert rep["results"] == {"exponent": 2, "zeta": 2, "value_mod_p": 4}
    assert rep["conventions"]["primitive_root"] == 3


def test_cocycle_needs_roots_of_unity():
    assert main(["cocycle", "--p", "11", "--r", "3", "--a", "2", "--b", "3"]) == 2
    assert main(["cocycle", "--p", "9", "--a", "2", "--b", "3"]) == 2
    assert main(["cocycle", "--a", "0", "--b", "3"]) == 2


@pytest.mark.parametrize("argv, want", [
    (["Sp", "6", "3"], "SO_7(C)"), (["Sp", "6", "4"], "Sp_6(C)"), (["SO", "7", "3"], "Sp_6(C)"),
    (["SO", "7", "2"], "SO_7(C)")])
def test_dualgroup(capsys, argv, want):
    code, rep = run_json(capsys, "dualgroup", *argv)
    assert code == 0 and rep["results"]["dual_group"] == want


def test_dualgroup_bad_size():
    assert main(["dualgroup", "Sp", "5", "3"]) == 2


def test_verify_exponents_passes(capsys):
    code, rep = run_json(capsys, "verify", "exponents")
    assert code == 0
    assert rep["params"]["suite"] == "exponents"
    assert rep["checks"] and all(c["status"] == "pass" for c in rep["checks"])
    names = [c["name"] for c in rep["checks"]]
    assert names == sorted(names)


def test_verify_heisenberg_reports_l_map_failures(capsys):
    code, rep = run_json(capsys, "verify", "heisenberg", "--iters", "50")
    assert code == 1
    failed = [c for c in rep["checks"] if c["status"] == "fail"]
    assert failed and all("l_map_homomorphism" in c["name"] for c in failed)
    assert all("witness" in c for c in failed)


def test_verify_bad_prime():
    assert main(["verify", "cocycle", "--p", "9"]) == 2
    assert main(["verify", "cocycle", "--p", "11"]) == 2


def test_global_options_before_or_after_command(capsys):
    main(["--json", "--seed", "5", "orbit", "3", "8"])
    a = capsys.readouterr().out
    main(["orbit", "3", "8", "--json", "--seed", "5"])
    b = capsys.readouterr().out
    assert a == b and json.loads(a)["seed"] == 5


def test_text_output(capsys):
    assert main(["orbit", "3", "8"]) == 0
    out = capsys.readouterr().out
    assert "partition: [3, 3, 2]" in out and "[pass]" in out


def test_reruns_are_byte_identical():
    cmd = [sys.executable, "-m", "thetalift.cli", "--json", "--seed", "3", "verify", "cocycle",
           "--iters", "20"]
    outs = [subprocess.run(cmd, capture_output=True, text=True) for _ in range(2)]
    assert outs[0].returncode == outs[1].returncode == 0
    assert outs[0].stdout == outs[1].stdout
