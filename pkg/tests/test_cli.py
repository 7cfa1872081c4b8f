import contextlib
import io
import json
import shutil
import subprocess

import pytest

from freepoisson.cli import run


def cap(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


def test_bracket():
    assert cap(["bracket", "-n", "3", "{x1, x2*x3}"]) == (
        0,
        "[x1,x2]*x3 + x2*[x1,x3]\n",
        "",
    )
    assert cap(["bracket", "-n", "2", "{x1,x1}"]) == (0, "0\n", "")


def test_mul_modes():
    assert cap(["mul", "-n", "2", "h(x1)", "x2"]) == (0, "x2*h(x1) + [x1,x2]\n", "")
    assert cap(["mul", "-n", "2", "--mode", "poisson", "x1+x2", "x1-x2"])[1] == (
        "-1*x2^2 + x1^2\n"
    )
    assert cap(["mul", "-n", "1", "--mode", "symplectic", "x1*y1", "x1"]) == (
        0,
        "x1^2*y1\n",
        "",
    )
    assert cap(["mul", "-n", "1", "--mode", "weyl", "y1", "x1"]) == (
        0,
        "x1*y1 - 1\n",
        "",
    )


def test_ham_and_fox():
    assert cap(["ham", "-n", "2", "x1*x2"]) == (0, "x1*h(x2) + x2*h(x1)\n", "")
    assert cap(["fox", "-n", "2", "{x1,x2}", "1"]) == (0, "-1*h(x2)\n", "")
    assert cap(["fox", "-n", "2", "{x1,x2}", "2"]) == (0, "h(x1)\n", "")
    # index out of range is a domain error
    code, out, err = cap(["fox", "-n", "2", "x1", "3"])
    assert code == 2 and out == "" and err


def test_jacobian():
    assert cap(["jacobian", "-n", "2", "x1", "x2 + x1^2"]) == (
        0,
        "[1, 0]\n[2*x1, 1]\n",
        "",
    )
    assert cap(["jacobian", "-n", "2", "--invert", "x1", "x2 + x1^2"]) == (
        0,
        "[1, 0]\n[-2*x1, 1]\n",
        "",
    )
    code, out, err = cap(["jacobian", "-n", "2", "--invert", "x1^2", "x2"])
    assert code == 3 and out == ""
    assert "inverse not found" in err
    # image count must match n
    code, out, err = cap(["jacobian", "-n", "2", "x1"])
    assert code == 2 and out == ""


def test_depend():
    assert cap(["depend", "-n", "1", "h(x1)", "x1*h(x1)"]) == (
        0,
        '{"status":"dependent","witness":["x1","-1"]}\n',
        "",
    )
    assert cap(["depend", "-n", "2", "h(x1)", "h(x2)"]) == (
        0,
        '{"status":"independent"}\n',
        "",
    )
    code, out, err = cap(["depend", "-n", "1", "--max-steps", "0", "h(x1)", "x1*h(x1)"])
    assert code == 3 and out == "" and err


def test_depend_oracle():
    assert cap(["depend", "-n", "1", "--oracle", "h(x1)", "x1*h(x1)"]) == (
        0,
        '{"status":"dependent","witness":["-1*x1","1"]}\n',
        "",
    )
    assert cap(["depend", "-n", "2", "--oracle", "h(x1)", "h(x2)"]) == (
        0,
        '{"status":"no_witness","hdeg_bound":2,"coeff_deg_bound":2}\n',
        "",
    )


def test_pair_status():
    assert cap(["pair-status", "-n", "1", "x1", "x1^2"]) == (
        0,
        '{"status":"dependent","lambda":"2*x1","mu":"1"}\n',
        "",
    )
    assert cap(["pair-status", "-n", "2", "x1", "x2"]) == (0, '{"status":"free"}\n', "")


def test_quantization_commands():
    assert cap(["moyal", "-n", "1", "x1", "y1"]) == (0, "x1*y1 + 1/2\n", "")
    assert cap(["symmetrize", "-n", "1", "x1*y1"]) == (0, "x1*y1 - 1/2\n", "")
    assert cap(["theta-left", "-n", "1", "x1"]) == (0, "x1 + 1/2*h(x1)\n", "")
    assert cap(["theta-right", "-n", "1", "x1"]) == (0, "x1 - 1/2*h(x1)\n", "")
    assert cap(["weyl-mul", "-n", "1", "y1", "x1"]) == (0, "x1*y1 - 1\n", "")


def test_json_format():
    code, out, err = cap(["bracket", "-n", "2", "--format", "json", "{x1,x2}"])
    assert code == 0 and err == ""
    assert json.loads(out) == {
        "terms": [{"coeff": "1", "pmono": [{"basis": "[x1,x2]", "exp": 1}]}]
    }
    code, out, _ = cap(["ham", "-n", "1", "--format", "json", "x1^2"])
    assert json.loads(out) == {
        "terms": [
            {"coeff": "2", "pmono": [{"basis": "x1", "exp": 1}], "hword": [1]}
        ]
    }


def test_exit_codes():
    # parse error
    code, out, err = cap(["bracket", "-n", "2", "{x1,"])
    assert code == 1 and out == "" and err
    # domain error
    code, out, err = cap(["bracket", "-n", "2", "x5"])
    assert code == 2 and out == "" and err
    # argparse usage errors
    assert cap(["bracket", "x1"])[0] == 2  # missing -n
    assert cap([])[0] == 2
    assert cap(["frobnicate", "-n", "2", "x1"])[0] == 2


def test_check_command():
    code, out, err = cap(["check", "-n", "2", "graded-top"])
    assert code == 0
    assert out.startswith("ok   graded-top:")
    code, out, err = cap(["check", "-n", "2", "no-such-suite"])
    assert code == 2 and err


def test_installed_entry_point():
    exe = shutil.which("fpa")
    if exe is None:
        pytest.skip("fpa is not on PATH")
    proc = subprocess.run(
        [exe, "bracket", "-n", "2", "{x1,x2}"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "[x1,x2]\n"
