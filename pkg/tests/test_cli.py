import json
import subprocess
import sys

import pytest

from lojexp.cli import (EXIT_BUDGET, EXIT_HYPOTHESIS, EXIT_OK, EXIT_PARSE,
                        EXIT_USAGE, EXIT_WEIGHTS, AnalysisRequest, main, run_analyze, run_batch)
from lojexp.groebner import Budget
from lojexp.weights import WeightSystem

from conftest import WEAK4

FAST = dict(samples=100)


def analyze(text, **kw):
    return run_analyze(AnalysisRequest(text, **{**FAST, **kw}))


def test_analyze_weak4_report():
    rep, code = analyze(WEAK4)
    assert code == EXIT_OK and rep["error"] is None
    assert rep["type"] == "10:1,2,2,9"
    assert rep["strict"] is False
    e = rep["exponent"]
    assert e["L"] == "4" and e["method"] == "theorem-main4"
    assert e["sufficiency_degree"] == "5"
    assert e["mu_milnor_orlik"] == "16" and e["mu_groebner"] == "16"
    assert rep["classification"]["M_w"] == [4]
    assert rep["classification"]["M_f"] == [1, 4]
    assert rep["verification"]["status"] == "exponent"
    assert rep["verification"]["witness"]["quotient"] == "4"


def test_compare_types():
    rep, code = analyze("z1*z6 + z2*z5 + z3*z4", type=WeightSystem(12, (1, 2, 3, 9, 10, 11)),
                        compare_types=[WeightSystem(2, (1,) * 6)])
    assert code == EXIT_OK
    assert rep["exponent"]["method"] == "splitting-lemma"
    assert rep["other_types"] == [{"type": "2:1,1,1,1,1,1", "L": "1", "method": "theorem-main1"}]


def test_family_warning():
    rep, _ = analyze("z1*z6 + z2*z5 + z3*z4", verify=False)
    assert any("several weight systems" in w for w in rep["warnings"])


@pytest.mark.parametrize("kw, code, err", [
    (dict(polynomial="x^2 +"), EXIT_PARSE, "PolynomialSyntaxError"),
    (dict(polynomial="x^2 + x^3"), EXIT_WEIGHTS, "WeightError"),
    (dict(polynomial="x^2 + y^3", type=WeightSystem(6, (2, 3))), EXIT_WEIGHTS, "WeightError"),
    (dict(polynomial="x*y", variables=["x", "y", "z"]), EXIT_HYPOTHESIS, "HypothesisError"),
])
def test_error_codes(kw, code, err):
    text = kw.pop("polynomial")
    rep, got = analyze(text, **kw)
    assert got == code
    assert rep["error"]["type"] == err
    assert rep["error"]["exit_code"] == code


def test_budget_exit_code():
    rep, code = analyze("x^2*y + y^4 + z^3", budget=Budget(max_spairs=1), verify=False)
    assert code == EXIT_BUDGET
    rep, code = analyze("x^2*y + y^4 + z^3", budget=Budget(max_spairs=1), verify=False,
                        assume_isolated=True)
    assert code == EXIT_OK
    assert rep["isolation"]["status"] == "assumed"
    assert rep["exponent"]["mu_groebner"] is None


def test_json_roundtrip_and_determinism():
    a, _ = analyze("x^3*y + y^2", seed=7)
    b, _ = analyze("x^3*y + y^2", seed=7)
    assert json.loads(json.dumps(a, sort_keys=True)) == a
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_batch_preserves_order():
    lines = ["# comment", "x^2 + y^3", "", "x^3 + y^3 + z^3 ; 3:1,1,1", "x^2 + x^3"]
    out = list(run_batch(lines, AnalysisRequest("", **FAST, verify=False)))
    assert [code for _, code in out] == [EXIT_OK, EXIT_OK, EXIT_WEIGHTS]
    assert out[1][0]["type"] == "3:1,1,1"


def test_batch_parallel_matches_sequential():
    lines = ["x^2 + y^3", "x^3 + y^3 + z^3", WEAK4]
    defaults = AnalysisRequest("", **FAST)
    seq = [json.dumps(r, sort_keys=True) for r, _ in run_batch(lines, defaults)]
    par = [json.dumps(r, sort_keys=True) for r, _ in run_batch(lines, defaults, jobs=2)]
    assert seq == par


def test_batch_bad_type_line():
    [(rep, code)] = run_batch(["x^2 + y^3 ; 6;3"], AnalysisRequest("", **FAST))
    assert code == EXIT_WEIGHTS and rep["error"]["type"] == "WeightError"


def test_batch_empty():
    assert list(run_batch([], AnalysisRequest(""))) == []


# ---------------------------------------------------------------- main()

def test_main_analyze_json(capsys):
    assert main(["analyze", WEAK4, "--format", "json", "--samples", "100"]) == EXIT_OK
    rep = json.loads(capsys.readouterr().out)
    assert rep["exponent"]["L"] == "4"


def test_main_analyze_text(capsys):
    assert main(["analyze", "x^2 + y^3", "--samples", "50"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "L(f) = 2  [theorem-main1]" in out
    assert "C0-sufficiency degree = 3" in out


def test_main_infer_weights(capsys):
    assert main(["infer-weights", WEAK4, "--format", "json"]) == EXIT_OK
    rep = json.loads(capsys.readouterr().out)
    assert rep["kind"] == "unique"
    assert main(["infer-weights", "x^2 + x^3"]) == EXIT_WEIGHTS


def test_main_milnor(capsys):
    assert main(["milnor", "x^3 + y^3 + z^3 + x^2", "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"mu": "4", "method": "local-truncation",
                                                   "isolated": True}
    assert main(["milnor", "x*y", "--vars", "x,y,z"]) == EXIT_HYPOTHESIS


def test_main_verify(capsys):
    assert main(["verify", "x^3 + y^3 + z^3", "--format", "json", "--samples", "200"]) == EXIT_OK
    rep = json.loads(capsys.readouterr().out)
    assert rep["witness"]["quotient"] == "2"
    assert rep["lower_sampling"]["spread"] <= 1.5


def test_main_deform(capsys):
    assert main(["deform", "x^3 + y^3 + z^3", "--perturbation", "x^2", "--t-samples", "1",
                 "--format", "json"]) == EXIT_OK
    rep = json.loads(capsys.readouterr().out)
    assert rep["mu_constant_by_degree"] is False
    assert rep["violating_monomials"] == [[2, 0, 0]]
    assert rep["oracle_mu_samples"] == [["1", "4"]]


def test_main_batch(tmp_path, capsys):
    path = tmp_path / "in.txt"
    path.write_text("x^2 + y^3\nx^2 + x^3\n")
    assert main(["batch", str(path), "--format", "json", "--no-verify"]) == EXIT_WEIGHTS
    out = [json.loads(line) for line in capsys.readouterr().out.splitlines() if line.strip()]
    assert len(out) == 2
    assert main(["batch", str(tmp_path / "missing.txt")]) == EXIT_USAGE


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["analyze"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "x^2", "--type", "bad"])
    assert exc.value.code == EXIT_USAGE


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "lojexp", "milnor", "x^2 + y^3"],
                         capture_output=True, text=True, timeout=120)
    assert out.returncode == 0
    assert "mu = 2" in out.stdout
