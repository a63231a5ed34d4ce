import json
import subprocess
import sys

import pytest

from bettibound.cli import CliConfig, main, run
from bettibound.explorer import SearchSpec

from .conftest import DATA

EX1 = str(DATA / "example1.txt")
EX3 = str(DATA / "example3.txt")


def call(capsysbinary, *argv):
    code = main(list(argv))
    out = capsysbinary.readouterr()
    return code, out.out.decode(), out.err.decode()


def test_coeffs(capsysbinary):
    code, out, _ = call(capsysbinary, "coeffs", "--l", "2", EX3)
    assert code == 0
    obj = json.loads(out)
    assert obj["coefficients"] == {"e0": "26", "e1": "65", "e2": "68"}
    assert obj["h_poly"] == ["1", "5", "7", "7", "5", "1"]


def test_bound_e1(capsysbinary):
    code, out, _ = call(capsysbinary, "bound", "--e1", EX1)
    obj = json.loads(out)
    assert code == 0
    assert (obj["bound"], obj["decimal"], obj["holds"]) == ("875/8", "109.375", True)
    assert obj["e"] == "90"


def test_bound_ej_reference(capsysbinary):
    code, out, _ = call(capsysbinary, "bound", "--ej", "2", "--reference-f", "150", EX3)
    obj = json.loads(out)
    assert obj["conjectural"] and obj["holds"]
    assert obj["inputs"]["f"] == 95
    assert obj["provenance"]["tilde"] == [5, 5, 5, 5, 10]
    assert obj["notes"]


def test_sym_decompose_koszul(capsysbinary):
    code, out, _ = call(capsysbinary, "koszul", "3")
    assert code == 0
    result = run(CliConfig("sym-decompose", format="auto"), out.encode())
    assert result[0] == 0
    obj = json.loads(result[1])
    assert obj == {"N": 3, "parts": [{"r": "3", "d": [0, 1, 2, 3]}]}


@pytest.mark.parametrize("path", [EX1, EX3])
def test_verify_examples(capsysbinary, path):
    code, out, _ = call(capsysbinary, "verify", path)
    assert code == 0
    assert all(json.loads(out)["checks"].values())


def test_parse_error_exit_code(capsysbinary, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0: 1 x\n")
    code, out, err = call(capsysbinary, "coeffs", str(bad))
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "ParseError"


def test_missing_file(capsysbinary, tmp_path):
    code, _, err = call(capsysbinary, "coeffs", str(tmp_path / "nope"))
    assert code == 1 and "nope" in err


def test_repeat_runs_byte_identical():
    data = (DATA / "example3.txt").read_bytes()
    cfg = CliConfig("verify")
    assert run(cfg, data) == run(cfg, data)


def test_decimal_digits_env(capsysbinary, monkeypatch):
    monkeypatch.setenv("BETTI_DECIMAL_DIGITS", "2")
    _, out, _ = call(capsysbinary, "bound", "--e1", EX3)
    assert json.loads(out)["decimal"] == "130.21"
    _, out, _ = call(capsysbinary, "bound", "--e1", "--digits", "3", EX3)
    assert json.loads(out)["decimal"] == "130.208"


def test_fuzz_exit_codes():
    clean = CliConfig("fuzz", search=SearchSpec(1, 3, 8, checks=("lemma",)))
    assert run(clean)[0] == 0
    dirty = CliConfig("fuzz", search=SearchSpec(2, 2, 7, checks=("proposition",)))
    code, out = run(dirty)
    assert code == 2
    assert json.loads(out)["violations"][0]["check"] == "proposition"
    conj = CliConfig("fuzz", search=SearchSpec(1, 4, 10, checks=("conjecture",), js=(2,)))
    assert run(conj)[0] == 0


def test_fuzz_guardrail_is_input_error(capsysbinary):
    code, _, err = call(capsysbinary, "fuzz", "--s-max", "9")
    assert code == 1 and "GuardrailError" in err


def test_text_output(capsysbinary):
    code, out, _ = call(capsysbinary, "bound", "--e0", "--output", "text", EX1)
    assert code == 0
    assert "holds: true" in out
    code, out, _ = call(capsysbinary, "koszul", "2", "--output", "text")
    assert "0: 1 2 1" in out


def test_stdin_and_module_entry_point():
    data = (DATA / "example1.txt").read_bytes()
    proc = subprocess.run([sys.executable, "-m", "bettibound", "coeffs", "-"],
                          input=data, capture_output=True, check=True)
    assert b'"36"' in proc.stdout
