import io
import json
import subprocess
import sys

import pytest

from qtorus.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


# (argv, expected exit code)
EXIT_FIXTURE = [
    (["normalize", "z1*z2"], 0),
    (["bracket", "z1", "z2"], 0),
    (["grade", "z1 + z3*z2"], 0),
    (["zcomponent", "C", "0", "0", "0"], 0),
    (["pi", "C"], 0),
    (["inlq", "I1*I2"], 0),
    (["cert", "2", "-1", "0"], 0),
    (["fo-normalize", "I3*I2*I1"], 0),
    (["verify", "--suite", "presentations", "--bound", "2"], 0),
    (["verify", "--suite", "casimir", "--nmax", "2", "--casimir-leading", "stated"], 1),
    (["normalize", "z1^"], 2),
    (["normalize", "[z1,"], 2),
    (["bracket", "z1", "z2 +"], 2),
    (["nonsense"], 2),
    (["cert", "1"], 2),
    (["normalize", "I1^(-1)"], 3),
    (["cert", "1", "1", "1"], 3),
    (["normalize", "z1/0"], 3),
    (["fo-normalize", "z1*I1"], 3),
]


@pytest.mark.parametrize("argv, code", EXIT_FIXTURE)
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_normalize_text_and_json():
    code, out, _ = run("normalize", "z1*z3")
    assert code == 0 and out.strip() == "q^(-1)*z3 z1"
    code, out, _ = run("--json", "normalize", "z1*z3")
    assert json.loads(out) == {"terms": [{"e": [1, 0, 1], "c": "(1)/(s^2)"}]}
    assert run("normalize", "--json", "z1*z3")[1] == out


def test_cert_prints_tree_and_ok():
    code, out, _ = run("cert", "1", "2", "1")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[-1] == "OK: evaluates to z3^1 z2^2 z1^1"
    assert lines[0].startswith("(")


def test_inlq_messages():
    assert run("inlq", "z3^2*z2^2*z1^2")[1].strip() == "NOT in L_q; witness: (2,2,2) ↦ 1"
    assert run("inlq", "z3*z2^2*z1")[1].strip() == "in L_q"
    obj = json.loads(run("--json", "inlq", "z3*z2*z1")[1])
    assert obj["in_Lq"] is False and obj["witness"]["terms"][0]["e"] == [1, 1, 1]


def test_zcomponent_of_casimir():
    out = run("zcomponent", "C", "2", "2", "2")[1].strip()
    assert out == "(-s^8)/(s^8-2*s^4+1)"


def test_fo_normalize_output():
    assert run("fo-normalize", "I2*I1")[1].strip() == "q*I1 I2 + -q^(1/2)*I3"


def test_parse_error_message_on_stderr():
    code, out, err = run("normalize", "z1^")
    assert code == 2 and out == ""
    assert "position 4" in err


def test_verify_json_schema():
    code, out, _ = run("verify", "--suite", "certificates", "--bound", "1", "--json")
    obj = json.loads(out)
    check = obj["checks"][0]
    assert code == 0
    assert set(check) == {"name", "passed", "cases", "elapsed_ms", "counterexample"}
    assert check["name"] == "certificates" and check["passed"]


def test_verify_failure_reports_counterexample():
    code, out, _ = run("verify", "--suite", "casimir", "--nmax", "2",
                       "--casimir-leading", "stated", "--json")
    cx = json.loads(out)["checks"][0]["counterexample"]
    assert code == 1 and cx["inputs"] == {"n": 2}


def test_output_is_deterministic_across_processes():
    cmd = [sys.executable, "-m", "qtorus", "--json", "normalize", "(z1 + q^(1/2)*z2)^3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
