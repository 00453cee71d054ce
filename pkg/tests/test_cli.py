import json
import subprocess
import sys
from pathlib import Path

import pytest

from symmoment.cli import run

DATA = Path(__file__).parent / "data"
VALID = DATA / "valid"
MALFORMED = DATA / "malformed"


def report(argv):
    code, text = run(argv)
    return code, json.loads(text)


def test_ext_eval_closed_form():
    code, rep = report(["ext", "eval", "--seminorm", str(VALID / "l1_11.json"),
                        "--poly", str(VALID / "closed_form_poly.json")])
    assert code == 0
    assert rep["result"]["lower"] == rep["result"]["upper"] == "3"
    assert rep["verdicts"][0]["value"] == "3"


def test_spectrum_test_boundary_point():
    code, rep = report(["spectrum", "test", "--seminorm", str(VALID / "l1.json"), "--radius", "1",
                        "--point", "[1, -1]"])
    assert code == 0 and rep["result"]["contains"] is True


def test_spectrum_test_outside_point_fails():
    code, rep = report(["spectrum", "test", "--seminorm", str(VALID / "l1.json"), "--point", "[1.5, 0]"])
    assert code == 1 and rep["result"]["contains"] is False


def test_missing_file():
    code, rep = report(["ext", "eval", "--seminorm", str(DATA / "absent.json"),
                        "--poly", str(VALID / "closed_form_poly.json")])
    assert code == 2 and "no such file" in rep["error"]


@pytest.mark.parametrize("name, argv, where", [
    ("truncated.json", ["ext", "eval", "--seminorm", "{}", "--poly", str(VALID / "closed_form_poly.json")],
     "truncated.json: line 1"),
    ("zero_weight.json", ["ext", "eval", "--seminorm", "{}", "--poly", str(VALID / "closed_form_poly.json")],
     "--seminorm.r[1]"),
    ("non_numeric_weight.json", ["norm", "dual", "--seminorm", "{}", "--point", "[1, 1]"], "--seminorm.r[1]"),
    ("small_exponent.json", ["norm", "dual", "--seminorm", "{}", "--point", "[1, 1]"], "--seminorm.p"),
    ("unknown_kind.json", ["norm", "dual", "--seminorm", "{}", "--point", "[1]"], "--seminorm.kind"),
])
def test_malformed_seminorms(name, argv, where):
    argv = [str(MALFORMED / name) if a == "{}" else a for a in argv]
    code, rep = report(argv)
    assert code == 2 and where in rep["error"]


def test_malformed_polynomial():
    code, rep = report(["ext", "eval", "--seminorm", str(VALID / "l1_11.json"),
                        "--poly", str(MALFORMED / "negative_exponent.json")])
    assert code == 2 and rep["error"].startswith("--poly.terms[0].exp[1]")


def test_malformed_table_measure_module_and_suite():
    assert run(["moments", "check", "--table", str(MALFORMED / "incomplete_table.json")])[0] == 2
    code, rep = report(["moments", "radius", "--measure", str(MALFORMED / "negative_weight_measure.json"),
                        "--r", "[1]"])
    assert code == 2 and rep["error"].startswith("--measure.atoms[0].weight")
    assert run(["module", "arch", "--module", str(MALFORMED / "zero_d_module.json")])[0] == 2
    code, rep = report(["suite", "run", "--config", str(MALFORMED / "unknown_check.json")])
    assert code == 2 and "no_such_check" in rep["error"]


def test_usage_errors_emit_reports():
    for argv in (["frobnicate"], ["norm"], ["norm", "eval", "--bogus"], []):
        code, rep = report(argv)
        assert code == 2 and "error" in rep


def test_module_cert_and_arch():
    code, rep = report(["module", "cert", "--module", str(VALID / "jacobi_module.json"),
                        "--poly", str(VALID / "jacobi_target.json"), "--epsilon", "1/10", "--degree", "3"])
    assert code == 0 and rep["result"]["found"] is True
    code, rep = report(["module", "cert", "--module", str(VALID / "jacobi_module.json"),
                        "--poly", '{"nvars": 1, "terms": [{"exp": [0], "coef": -1}]}'])
    assert code == 1 and rep["result"]["found"] is False and rep["result"]["witness"]
    code, rep = report(["module", "arch", "--module",
                        '{"d": 1, "generators": [{"nvars": 1, "terms": [{"exp": [0], "coef": 1}, '
                        '{"exp": [2], "coef": -1}]}]}'])
    assert code == 0 and rep["result"]["k"] == 1


def test_moments_verbs():
    table = str(VALID / "symmetric_table.json")
    assert report(["moments", "check", "--table", table])[0] == 0
    code, rep = report(["moments", "reconstruct", "--table", table, "--max-atoms", "3"])
    assert code == 0 and len(rep["result"]["measure"]["atoms"]) == 2
    code, rep = report(["moments", "mk", "--table", table, "--K", "3"])
    assert code == 0 and rep["result"]["mk"] == [1.0, 1.0, 1.0, 1.0]
    code, rep = report(["moments", "radius", "--table", table, "--r", "[1]",
                        "--measure", '{"atoms": [{"point": [1], "weight": 0.5}, {"point": [-1], "weight": 0.5}]}'])
    assert code == 0 and rep["result"]["exact"] == "1"
    code, rep = report(["moments", "distinguish", "--measure1", '{"atoms": [{"point": [1], "weight": 1}]}',
                        "--measure2", '{"atoms": [{"point": [-1], "weight": 1}]}'])
    assert code == 0 and rep["result"]["monomial"] == [1]


def test_norm_and_nuclear_verbs():
    code, rep = report(["norm", "eval", "--seminorm", '{"kind": "weighted_l1", "r": [2, 3]}',
                        "--poly", '{"nvars": 2, "terms": [{"exp": [1, 0], "coef": 1}, {"exp": [0, 1], "coef": -1}]}'])
    assert code == 0 and rep["result"]["value"] == "5"
    code, rep = report(["nuclear", "check", "--s1", "0", "--s2", "1"])
    assert code == 0 and rep["result"] == {"dominates": True, "quasi_nuclear": True}
    code, rep = report(["nuclear", "check", "--s1", "0", "--s2", "0.4"])
    assert code == 1 and rep["result"]["quasi_nuclear"] is False


def test_input_bundle_fills_options():
    bundle = json.dumps({"seminorm": {"kind": "weighted_l1", "r": [1, 1]},
                         "poly": json.loads((VALID / "closed_form_poly.json").read_text()), "budget": 8})
    code, rep = report(["ext", "eval", "--input", bundle])
    assert code == 0 and rep["result"]["upper"] == "3"


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("SYMM_FORMAT", "text")
    code, text = run(["spectrum", "test", "--seminorm", str(VALID / "l1.json"), "--point", "[1, -1]"])
    assert code == 0 and text.startswith("spectrum test: PASS")
    monkeypatch.setenv("SYMM_FORMAT", "json")
    monkeypatch.setenv("SYMM_TOL", "0.1")
    code, rep = report(["spectrum", "test", "--seminorm", '{"kind": "lp", "p": 2}', "--point", "[0.65, 0.8]"])
    assert code == 0 and rep["verdicts"][0]["tolerance"] == 0.1


def test_spectrum_sample_is_seeded():
    argv = ["spectrum", "sample", "--seminorm", '{"kind": "lp", "p": 2}', "--nvars", "3", "--count", "9"]
    a, b = run(argv + ["--seed", "5"]), run(argv + ["--seed", "5"])
    assert a == b and a[0] == 0
    assert run(argv + ["--seed", "6"])[1] != a[1]


def test_suite_subset_and_determinism():
    config = str(VALID / "small_suite.json")
    first, second = run(["suite", "run", "--config", config]), run(["suite", "run", "--config", config])
    assert first == second and first[0] == 0
    names = [v["name"] for v in json.loads(first[1])["verdicts"]]
    assert names == ["quasi_analyticity", "quasi_nuclear"]
    rep = json.loads(run(["suite", "run", "--groups", "hilbert_scale"])[1])
    assert [v["name"] for v in rep["verdicts"]] == ["quasi_nuclear"]


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "symmoment.cli", "spectrum", "test", "--seminorm",
                           str(VALID / "l1.json"), "--point", "[1, -1]"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["result"]["contains"] is True
    proc = subprocess.run([sys.executable, "-m", "symmoment.cli", "ext", "eval", "--seminorm", "missing.json",
                           "--poly", "missing.json"], capture_output=True, text=True)
    assert proc.returncode == 2 and "error" in json.loads(proc.stdout)
