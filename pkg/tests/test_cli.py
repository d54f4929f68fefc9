import json
import subprocess
import sys

import pytest

from schubop.cli import ExpressionError, evaluate, main
from schubop.polyring import SparsePolynomial as P


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


@pytest.mark.parametrize("argv,expected", [
    (["eval", "--n", "7", "Qt[5,4,3,2,1]*Y[2,5] | nablaB(2)", "--expand-ptilde", "B"], "4*Qt[4,3,2]"),
    (["eval", "--n", "7", "Pt[6,5,4,3,2,1]*Y[1,1,1,2] | nablaD(2)", "--expand-ptilde", "D"], "-Pt[6,2]"),
    (["eval", "--n", "2", "x^[1,0] | d1"], "1"),
    (["eval", "--n", "2", "x^[1,0] | d0c"], "1"),
    (["eval", "--n", "2", "x^[1,0] | dh"], "-1"),
    (["eval", "--n", "3", "Y[0,2] - s[2]@2"], "0"),
    (["eval", "--n", "2", "SP[1] | Us !2"], "0"),
    (["eval", "--n", "2", "SP[2,1] | Ve !2"], "x1^2*x2 + x1*x2^2"),
    (["expand", "--n", "2", "Pt[1]*Pt[1]", "--type", "D"], "(1/2^2*x1^2 + 1/2^1*x1*x2 + 1/2^2*x2^2)*Pt[]"),
])
def test_eval_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_parse_error_has_caret(capsys):
    code, _, err = run(capsys, "eval", "--n", "2", "x^[1,0] +* 2")
    assert code == 2
    assert "column 10" in err
    assert err.splitlines()[-1].index("^") == 2 + 9


@pytest.mark.parametrize("text", ["d1", "x^[1,0] | d2", "Qt[", "Y[1,", "x^[1,0] | nablaB(3)", "p[1] + x^[1,0]"])
def test_invalid_expressions(text):
    with pytest.raises(ExpressionError):
        evaluate(text, 2, 8)


def test_operator_precedence():
    x1, x2 = P.var(2, 1), P.var(2, 2)
    assert evaluate("x^[1,0] + x^[0,1] * 2", 2, 8) == x1 + x2.scale(2)
    assert evaluate("-x^[1,0] | d1", 2, 8) == P.constant(2, -1)
    assert evaluate("1/2^1 * x^[2,0]", 2, 8) == (x1 * x1).scale("1/2")


def test_max_n_guard():
    with pytest.raises(SystemExit):
        main(["--max-n", "3", "eval", "--n", "4", "1"])


def test_json_polynomial(capsys):
    code, out, _ = run(capsys, "eval", "--n", "2", "x^[1,0]*x^[0,1]", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 2, "terms": [{"coeff": {"e": 0, "m": "1"}, "exp": [1, 1]}]}


def test_verify_report(capsys):
    code, out, _ = run(capsys, "verify", "coxeter", "--n", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 == len(doc["failures"])
    assert set(doc) == {"suite", "params", "cases", "failures", "seconds", "notes"}
    assert doc["params"] == {"n": 3, "seed": 0}


def test_verify_exit_code_counts_failures(capsys):
    code, out, _ = run(capsys, "verify", "dualityA_printed", "--format", "json")
    assert code == len(json.loads(out)["failures"]) > 0


def test_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nosuch")
    assert code == 2 and "unknown suite" in err


@pytest.mark.parametrize("suite,n", [("dualityD", 3), ("coxeter", 4)])
def test_verify_documented_suites(capsys, suite, n):
    code, out, _ = run(capsys, "verify", suite, "--n", str(n))
    assert code == 0 and "0 failures" in out


def test_output_is_byte_identical():
    cmd = [sys.executable, "-m", "schubop.cli", "eval", "--n", "4", "Qt[3,1]*Y[2,1] | nablaB(1)"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.strip()
