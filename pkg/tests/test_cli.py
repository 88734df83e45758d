import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from superint.algebra import const, frac_equal, var
from superint.cli import InputError, parse_params, run


def _run(argv, capsys):
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_params():
    p = parse_params("u=1/2,v=v,moments=orthogonal")
    assert p["moments"] == "orthogonal"
    assert frac_equal(p["u"], const(Fraction(1, 2)))
    assert frac_equal(p["v"], var("v"))
    with pytest.raises(InputError):
        parse_params("q=1")
    with pytest.raises(InputError):
        parse_params("u")
    with pytest.raises(InputError):
        parse_params("u=1.5")


def test_expand_hermite(capsys):
    code, out, _ = _run(["expand", "--model", "hermite", "--shape", "2", "--nv", "2"], capsys)
    assert code == 0
    assert json.loads(out) == {"[2]": "1", "[]": "-3"}


def test_schur_and_jack(capsys):
    code, out, _ = _run(["schur", "--shape", "1,1"], capsys)
    assert code == 0 and json.loads(out)["p"] == {"[1,1]": "1/2", "[2]": "-1/2"}
    code, out, _ = _run(["jack", "--shape", "2", "--params", "beta=1"], capsys)
    assert code == 0 and json.loads(out)["normalization"] == "P"


def test_moments_wilson(capsys):
    code, out, _ = _run(["moments", "--model", "wilson", "--shape", "1", "--nv", "1"], capsys)
    assert code == 0
    assert json.loads(out)["value"] == "(a+b)(a+c)(a+d)/(a+b+c+d)"


def test_coeffs_with_alpha(capsys):
    code, out, _ = _run(["coeffs", "--model", "wilson", "--shape", "2", "--sub", "1", "--nv", "2"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert set(doc) >= {"forward", "inverse", "alpha", "alpha_constant"}


@pytest.mark.parametrize("argv", [
    ["expand", "--model", "laguerre", "--shape", "1", "--nv", "1"],
    ["expand", "--model", "hermite", "--shape", "1,2", "--nv", "2"],
    ["expand", "--model", "hermite", "--shape", "1,1,1", "--nv", "2"],
    ["expand", "--model", "hermite", "--shape", "1"],
    ["verify"],
    ["verify", "--suite", "nope"],
    ["nonsense"],
    ["moments", "--model", "jacobi", "--shape", "1", "--nv", "1", "--params", "u=x"],
])
def test_input_errors_exit_2(argv, capsys):
    code, _, err = _run(argv, capsys)
    assert code == 2
    assert err.startswith("superint: error:")
    assert "Traceback" not in err


def test_verify_json_roundtrip(capsys, tmp_path):
    path = tmp_path / "g.json"
    code, _, _ = _run(["verify", "--suite", "gaussian", "--max-size", "4", "--nv", "2", "--out", str(path)], capsys)
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["suite"] == "gaussian"
    assert doc["summary"]["fail"] == 0
    assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == path.read_text()


def test_verify_csv_rows(capsys):
    code, out, _ = _run(["verify", "--suite", "gaussian", "--max-size", "3", "--nv", "2", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["id", "model", "R", "Q", "N", "lhs", "rhs", "equal", "discrepancy"]
    # |R| <= 3 with at most one row at N=1 (4 shapes) plus at most two rows at N=2 (6 shapes)
    assert len(rows) - 1 == 4 + 6


def test_verify_failure_exit_1(capsys):
    code, out, _ = _run(["verify", "--suite", "mp", "--max-size", "1", "--nv", "1", "--variant", "paper-literal",
                         "--format", "pretty"], capsys)
    assert code == 1
    assert "FAIL" in out


def test_verify_is_deterministic(capsys):
    argv = ["verify", "--suite", "alpha-lab", "--max-size", "3", "--nv", "2", "--seed", "5"]
    _, a, _ = _run(argv, capsys)
    _, b, _ = _run(argv, capsys)
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "superint", "schur", "--shape", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["p"] == {"[1]": "1"}
