"""Command-line driver: output shapes, exit codes, determinism."""

import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from gradedrings.cli import main

FIXTURE = """
ring Q6 {
  base Z/6
  grading Z
  gen x deg 1
  rel x^3
}

ring L6 {
  base Z/6
  grading Z
  gen x deg 1 invertible
}

ring P2 {
  base Q
  grading Z
  gen x deg 1
  gen y deg 1
}
"""

TORSION = """
ring GQ3 {
  base Q
  grading Z/3
  gen x deg 1
  rel x^3 - 1
}
"""


@pytest.fixture()
def ringfile(tmp_path):
    path = tmp_path / "rings.gr"
    path.write_text(FIXTURE)
    return str(path)


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_parse_summary(ringfile):
    code, out, _ = run_cli("parse", ringfile)
    assert code == 0
    assert "3 ring(s); round trip ok" in out
    code, out, _ = run_cli("parse", ringfile, "--json")
    data = json.loads(out)
    assert data["round_trip"] is True
    assert [r["name"] for r in data["rings"]] == ["Q6", "L6", "P2"]


def test_eval_normalizes(ringfile):
    code, out, _ = run_cli("eval", ringfile, "(1 + 2*x)^2")
    assert code == 0
    assert out.splitlines()[0] == "1 + 4*x + 4*x^2"


def test_decide_emits_json_certificates(ringfile):
    code, out, _ = run_cli("decide", "unit", ringfile, "1 + 2*x")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["verdict"] == "unit"
    assert data["verified"] is True
    assert "inverse" in data["certificate"]

    code, out, _ = run_cli("decide", "nilpotent", ringfile, "2*x")
    assert json.loads(out)["verdict"] == "nilpotent"

    code, out, _ = run_cli("decide", "zerodivisor", ringfile, "2 + 3*x")
    assert json.loads(out)["verdict"] == "zero_divisor"

    code, out, _ = run_cli(
        "decide", "unit", ringfile, "--ring", "L6", "2*x + 3*x^-1")
    data = json.loads(out)
    assert data["verdict"] == "unit"
    assert data["certificate"]["inverse"] == "2*x^-1 + 3*x"

    code, out, _ = run_cli("decide", "idempotent", ringfile, "3 + 3*x")
    assert json.loads(out)["verdict"] == "not_idempotent"


def test_oracle_report(ringfile):
    code, out, _ = run_cli("oracle", ringfile, "--report", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["cardinality"] == 216
    assert data["units"] == 72
    assert data["nilpotents"] == 36
    assert sorted(data["primes"]) == [72, 108]
    assert data["nilradical_graded"] is True
    assert data["jacobson_graded"] is True


def test_spectra_modes(ringfile):
    code, out, _ = run_cli("spectra", ringfile, "--pi0", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["counts"] == {"spec": 2, "spec_degree_zero": 2,
                              "spec_star": 2}

    code, out, _ = run_cli("spectra", "laurent", "--n", "12", "--json")
    data = json.loads(out)
    assert data["count"] == 2

    code, out, _ = run_cli("spectra", "proj", ringfile, "--ring", "P2",
                           "--gens", "x,y", "--json")
    data = json.loads(out)
    assert data["verdict"] == "QuasiCompact"

    code, out, _ = run_cli("spectra", "proj", ringfile, "--ring", "P2",
                           "--gens", "x^2*y,x*y^2", "--cap", "10", "--json")
    data = json.loads(out)
    assert data["verdict"] == "Unknown"
    assert data["cap"] == 10


def test_gallery_command(ringfile):
    code, out, _ = run_cli("gallery", "laurent_unit")
    assert code == 0
    assert "all checks passed" in out
    code, out, _ = run_cli("gallery", "torsion_nilradical", "--p", "2",
                           "--json")
    data = json.loads(out)
    assert data["passed"] is True


def test_exit_code_semantic_errors(tmp_path, ringfile):
    bad = tmp_path / "bad.gr"
    bad.write_text("ring A { base Z gen x deg 1 rel 1/2 }")
    code, _, err = run_cli("parse", str(bad))
    assert code == 1 and "rational literals" in err

    code, _, err = run_cli("eval", ringfile, "q + 1")
    assert code == 1 and "unknown generator" in err

    code, _, err = run_cli("eval", str(tmp_path / "missing.gr"), "x")
    assert code == 1

    code, _, err = run_cli("spectra", "laurent")
    assert code == 1 and "--n" in err

    code, _, err = run_cli("eval", ringfile, "--ring", "NOPE", "x")
    assert code == 1 and "NOPE" in err


def test_exit_code_cap_exceeded(tmp_path):
    path = tmp_path / "gq3.gr"
    path.write_text(TORSION)
    code, _, err = run_cli("decide", "nilpotent", str(path), "x - 1")
    assert code == 2
    assert "cap" in err.lower()


def test_json_outputs_are_deterministic(ringfile):
    battery = [
        ("decide", "unit", ringfile, "1 + 2*x"),
        ("decide", "nilpotent", ringfile, "2*x + 3*x^2"),
        ("decide", "zerodivisor", ringfile, "2"),
        ("decide", "idempotent", ringfile, "3"),
        ("oracle", ringfile, "--report", "--json"),
        ("spectra", ringfile, "--pi0", "--json"),
        ("spectra", "laurent", "--n", "30", "--json"),
        ("gallery", "mccoy_z6", "--json"),
    ]
    first = [run_cli(*argv) for argv in battery]
    second = [run_cli(*argv) for argv in battery]
    assert first == second
