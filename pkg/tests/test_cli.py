import io
import json
import shutil
import subprocess
import sys

import pytest

from helpers import FIXTURES
from pontrel.cli import main
from pontrel.problem import load_problem
from pontrel.report import Report, run_analyze, run_eval, run_verify


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def fx(name):
    return str(FIXTURES / f"{name}.krf")


def perturbed(tmp_path, name, key, i, j, value):
    d = json.loads((FIXTURES / f"{name}.krf").read_text())
    d["expected"][key][i][j] = value
    p = tmp_path / f"{name}_perturbed.krf"
    p.write_text(json.dumps(d, indent=2))
    return str(p)


def test_analyze_text():
    code, out, _ = run("analyze", fx("ex42"))
    assert code == 0
    assert "kappa: 2" in out
    assert "pass" in out and "fail " not in out


def test_analyze_json_round_trip_and_determinism():
    code, out, _ = run("analyze", fx("ex42"), "--output", "json")
    assert code == 0
    report = Report.from_json(out)
    assert report.to_json() == out
    assert run("analyze", fx("ex42"), "--output", "json")[1] == out
    d = report.data
    assert d["P"] == [["3/4", "1/8", "1/4"], ["1/2", "3/4", "-1/2"], ["1/2", "-1/4", "1/2"]]
    assert d["kappa"] == 2 and d["negative_squares_lower_bound"] == 2
    for key in ("S", "A_hat", "S_plus", "R_hat", "complement", "range", "certificates",
                "boundary_triple", "Q", "M", "regular", "samples"):
        assert key in d


def test_analyze_singular_derivative_keeps_earlier_stages():
    code, out, _ = run("analyze", fx("singular_derivative"), "--output", "json")
    assert code == 3
    d = json.loads(out)
    assert d["error"]["type"] == "DerivativeNotInvertible"
    assert d["error"]["stage"] == "projection"
    for key in ("kappa", "minimal", "strict", "Q", "q_prime_infinity"):
        assert key in d
    assert "P" not in d


def test_analyze_non_simple_fails_certificate():
    code, out, _ = run("analyze", fx("non_simple"))
    assert code == 1
    assert "simplicity_defect_span_is_K" in out


def test_eval():
    code, out, _ = run("eval", fx("ex42"), "--at", "1+i")
    assert code == 0
    assert "-1/2+i" in out
    values = run_eval(load_problem(fx("ex42")), "1+i")
    assert values["Q"] == values["M"]
    assert values["Q"] == [["-1/2+i", "1/2-1/2i"], ["1/2-1/2i", "2/5-1/5i"]]


def test_eval_at_spectrum_point():
    code, _, err = run("eval", fx("ex42"), "--at", "0")
    assert code == 3
    assert "NotInResolventSet" in err


def test_eval_bad_point():
    code, _, err = run("eval", fx("ex42"), "--at", "one")
    assert code == 2
    assert "input error" in err


@pytest.mark.parametrize("name", ["ex41", "ex42"])
def test_verify_golden(name):
    code, out, _ = run("verify", fx(name))
    assert code == 0, out
    assert "0 mismatches" in out


def test_verify_perturbed_fixture_reports_location(tmp_path):
    path = perturbed(tmp_path, "ex42", "P", 0, 0, "1/2")
    code, out, _ = run("verify", path)
    assert code == 1
    assert "P[0][0]: expected 1/2, got 3/4" in out


def test_verify_perturbed_subspace_and_relation(tmp_path):
    d = json.loads((FIXTURES / "ex42.krf").read_text())
    d["expected"]["complement"] = [["1", "2", "2"]]
    d["expected"]["S_plus"] = d["expected"]["S_plus"][:4]
    p = tmp_path / "bad.krf"
    p.write_text(json.dumps(d))
    result = run_verify(load_problem(p))
    assert result.exit_code == 1
    assert any(x.startswith("complement: expected span{(1, 2, 2)}") for x in result.diffs)
    assert any(x.startswith("S_plus: expected graph") and "dim 4" in x for x in result.diffs)


def test_verify_unknown_expected_key(tmp_path):
    d = json.loads((FIXTURES / "ex41.krf").read_text())
    d["expected"]["bogus"] = 1
    p = tmp_path / "bogus.krf"
    p.write_text(json.dumps(d))
    assert run_verify(load_problem(p)).diffs == ["bogus: unknown expected key"]


def test_input_errors_exit_2(tmp_path):
    code, _, err = run("analyze", str(tmp_path / "missing.krf"))
    assert code == 2
    bad = tmp_path / "bad.krf"
    bad.write_text('{"space": {"J": [["1"]]},\n "A": [["0"]],\n "gamma": [["x"]]}')
    code, _, err = run("verify", str(bad))
    assert code == 2
    assert "line 3" in err
    notj = tmp_path / "notj.krf"
    notj.write_text('{"space": {"J": [["1", "0"], ["0", "2"]]}, "A": [["0", "0"], ["0", "0"]],'
                    ' "gamma": [["1"], ["0"]]}')
    code, _, err = run("analyze", str(notj))
    assert code == 2
    assert "J not a symmetry" in err


def test_report_api_matches_cli():
    report = run_analyze(load_problem(fx("ex41")))
    assert report.exit_code == 0
    assert report.data["S_plus"] == [[["1"], ["0"]], [["0"], ["1"]]]
    assert report.data["boundary_triple"]["gamma0"] == [["0", "1"]]
    assert report.data["boundary_triple"]["gamma1"] == [["-1", "0"]]


@pytest.mark.skipif(shutil.which("pontrel") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["pontrel", "verify", fx("ex41")], capture_output=True, text=True)
    assert proc.returncode == 0
    proc = subprocess.run([sys.executable, "-m", "pontrel.cli", "analyze", fx("ex41")],
                          capture_output=True, text=True)
    assert proc.returncode == 0


@pytest.mark.parametrize(
    "name, z, q",
    [("ex42", "1", [["-2", "1"], ["1", "1/2"]]), ("ex41", "2", [["-1/2"]])],
)
def test_eval_values(name, z, q):
    assert run_eval(load_problem(fx(name)), z)["Q"] == q


def test_verify_accepts_other_basis(tmp_path):
    d = json.loads((FIXTURES / "ex42.krf").read_text())
    # (3,2,2) + (1,0,1) and (3,2,2) - 2(1,0,1) span the same PK
    d["expected"]["range"] = [["4", "2", "3"], ["1", "2", "0"]]
    d["expected"]["complement"] = [["1/2", "-1", "-1"]]
    p = tmp_path / "basis.krf"
    p.write_text(json.dumps(d))
    result = run_verify(load_problem(p))
    assert result.diffs == [] and result.exit_code == 0


def test_report_regular_witness():
    d = run_analyze(load_problem(fx("ex42"))).data
    assert d["regular_witness"] == "i"
