import io
import json
import re
import subprocess
import sys

import pytest

from cliffexp.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_clidata():
    code, text = run("clidata", "-p", "3", "-q", "0")
    assert code == 0
    assert text.strip() == "[complex, 2, simple, 1/2 Id + 1/2 e1, [Id, e2, e3, e23], [Id, e23], [Id, e2]]"


def test_phi_uses_default_signature(data_dir):
    code, text = run("phi", "--matrix", str(data_dir / "complex2.json"))
    assert code == 0
    assert text.strip() == "1/2 Id + 1/2 e1 + e2 + e3 + 2 e13 + 2 e23"


def test_phi_alternative_signature(data_dir):
    code, text = run("phi", "--sig", "1,2", "--matrix", str(data_dir / "complex2.json"))
    assert code == 0
    assert text.strip()


def test_minpoly_commands(data_dir):
    code, text = run("minpoly", "--matrix", str(data_dir / "complex2.json"), "--over-entries")
    assert code == 0
    assert text.splitlines() == ["x^4 - 2*x^3 + 13*x^2 - 12*x + 40", "x^2 - x + 6 + 2*I"]
    code, text = run("minpoly", "--sig", "3,1", "--expr", "e1 + e4")
    assert (code, text.strip()) == (0, "x^2")


def test_exp_exact_has_no_floats(data_dir):
    code, text = run("exp", "--sig", "3,1", "--matrix", str(data_dir / "real4.json"), "--order", "20")
    assert code == 0
    doc = json.loads(text)
    assert doc["order"] == 20 and doc["signature"] == [3, 1]
    assert doc["rows"][0][0] == "1/2432902008176640000"
    for row in doc["rows"]:
        for entry in row:
            assert "." not in entry and "e-" not in entry
            assert re.fullmatch(r"-?\d+(/\d+)?", entry)


def test_exp_float_digits(data_dir):
    code, text = run(
        "exp", "--matrix", str(data_dir / "quat2.json"), "--order", "20",
        "--format", "float", "--digits", "10",
    )
    assert code == 0
    rows = json.loads(text)["rows"]
    assert rows[0][0] == "-6.543602577 - 1.978264272*ii + 0.2339782783*jj + 7.376417403*kk"


def test_exp_of_zero_is_identity(tmp_path):
    path = tmp_path / "zero.json"
    path.write_text(json.dumps({"kind": "quaternion", "rows": [["0", "0"], ["0", "0"]]}))
    for order in ("1", "7"):
        code, text = run("exp", "--matrix", str(path), "--order", order)
        assert code == 0
        assert json.loads(text)["rows"] == [["1", "0"], ["0", "1"]]


def test_exp_eps_mode(data_dir):
    code, text = run("exp", "--matrix", str(data_dir / "complex2.json"), "--eps", "1e-19")
    assert code == 0
    assert 20 < json.loads(text)["order"] < 64


def test_verify_reports_small_norm(data_dir):
    code, text = run("verify", "--sig", "3,0", "--matrix", str(data_dir / "complex2.json"),
                     "--order", "30", "--digits", "20")
    assert code == 0
    fields = dict(line.split(": ", 1) for line in text.splitlines())
    assert fields["signature"] == "(3,0)" and fields["order"] == "30"
    assert float(fields["one_norm"]) <= 5e-18


def test_outputs_are_deterministic(data_dir):
    args = ("exp", "--matrix", str(data_dir / "quat2.json"), "--order", "12")
    assert run(*args) == run(*args)


def test_signature_override_in_document(tmp_path):
    path = tmp_path / "sig.json"
    path.write_text(json.dumps({"kind": "real", "rows": [[1, 2], [3, 4]], "signature": [1, 1]}))
    code, text = run("phi", "--matrix", str(path))
    assert code == 0


@pytest.mark.parametrize(
    "argv,code,needle",
    [
        (("clidata", "-p", "2", "-q", "1"), 1, "semisimple"),
        (("minpoly", "--sig", "3,1", "--expr", "e21"), 2, "e21"),
        (("minpoly", "--expr", "e1"), 2, "--sig"),
    ],
)
def test_error_exit_codes(argv, code, needle, capsys):
    assert main(list(argv)) == code
    assert needle in capsys.readouterr().err


def test_dimension_mismatch_exits_one(data_dir, capsys):
    assert main(["phi", "--sig", "3,1", "--matrix", str(data_dir / "complex2.json")]) == 1
    assert "complex" in capsys.readouterr().err


def test_missing_file_exits_one(tmp_path, capsys):
    assert main(["phi", "--matrix", str(tmp_path / "nope.json")]) == 1
    assert "nope.json" in capsys.readouterr().err


def test_bad_json_exits_two(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"kind": "real", "rows": [[1, 2], [3, 4]]')
    assert main(["phi", "--matrix", str(path)]) == 2


def test_digits_environment_variable(data_dir):
    env_run = subprocess.run(
        [sys.executable, "-m", "cliffexp", "exp", "--matrix", str(data_dir / "complex2.json"),
         "--order", "30", "--format", "float"],
        env={"CLIFFEXP_DIGITS": "8", "PATH": ""},
        capture_output=True,
        text=True,
    )
    assert env_run.returncode == 0, env_run.stderr
    first = json.loads(env_run.stdout)["rows"][0][0]
    assert first == "-0.56382710 + 0.26103952*I"
