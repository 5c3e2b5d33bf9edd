import json

import pytest

from mzvshuffle.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_shuffle_latex_zeta_mode(capsys):
    code, out, _ = run_cli(capsys, "shuffle", "xy", "xy", "--format", "latex")
    assert code == 0
    assert out == "2\\zeta(2,2)+4\\zeta(3,1)\n"


def test_shuffle_empty_word(capsys):
    code, out, _ = run_cli(capsys, "shuffle", "", "xy")
    assert code == 0
    assert out == "xy\n"


def test_shuffle_methods_agree(capsys):
    outputs = set()
    for method in ("recursive", "permutation", "general", "auto"):
        code, out, _ = run_cli(capsys, "shuffle", "x^2y", "xy", "--method", method)
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_shuffle_general_rejects_non_h1(capsys):
    code, _, err = run_cli(capsys, "shuffle", "xy", "yx", "--method", "general")
    assert code == 3
    assert "ending in y" in err


def test_shuffle_parse_error(capsys):
    code, _, err = run_cli(capsys, "shuffle", "x#y", "y")
    assert code == 2
    assert "offset" in err


def test_shuffle_exponent_overflow(capsys):
    code, _, err = run_cli(capsys, "shuffle", "x^99999999", "y")
    assert code == 2
    assert "cap" in err


def test_shuffle_json_schema(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    from pathlib import Path

    schema = json.loads(
        (Path(__file__).resolve().parents[1] / "docs" / "schemas" / "lincomb.schema.json").read_text()
    )
    code, out, _ = run_cli(capsys, "shuffle", "xy", "xyy", "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), schema)


def test_shuffle_deterministic(capsys):
    runs = {run_cli(capsys, "shuffle", "xyy", "x^2y")[1] for _ in range(3)}
    assert len(runs) == 1


def test_zeta_command(capsys):
    code, out, _ = run_cli(capsys, "zeta", "2")
    assert code == 0
    assert out.startswith("zeta(2) = 1.6448")
    assert "+/-" in out


def test_zeta_more_terms_tighter_error(capsys):
    _, out_default, _ = run_cli(capsys, "zeta", "3,1")
    _, out_more, _ = run_cli(capsys, "zeta", "3,1", "--terms", "40000")
    err_default = float(out_default.split("+/-")[1])
    err_more = float(out_more.split("+/-")[1])
    assert err_more < err_default


def test_zeta_inadmissible(capsys):
    code, _, err = run_cli(capsys, "zeta", "1,2")
    assert code == 3
    code, _, err = run_cli(capsys, "zeta", "x")
    assert code == 2


def test_identity_command(capsys):
    code, out, _ = run_cli(capsys, "identity", "xy", "xy")
    assert code == 0
    assert "PASS" in out
    code, out, _ = run_cli(capsys, "identity", "xxy", "xy")
    assert code == 0


def test_identity_inadmissible(capsys):
    code, _, _ = run_cli(capsys, "identity", "y", "xy")
    assert code == 3


def test_identity_impossible_tolerance(capsys):
    code, out, _ = run_cli(capsys, "identity", "xy", "xy", "--tol", "1e-300")
    assert code == 1
    assert "FAIL" in out


def test_verify_small_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "res11", "--max-weight", "6")
    assert code == 0
    assert "[PASS]" in out


def test_verify_json_schema(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    from pathlib import Path

    schema = json.loads(
        (
            Path(__file__).resolve().parents[1]
            / "docs"
            / "schemas"
            / "verify_report.schema.json"
        ).read_text()
    )
    code, out, _ = run_cli(capsys, "verify", "appendixA", "--max-weight", "7", "--json")
    assert code == 0
    reports = json.loads(out)
    assert isinstance(reports, list) and reports
    for report in reports:
        jsonschema.validate(report, schema)


def test_verify_weight_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("MZV_MAX_WEIGHT", "6")
    code, _, err = run_cli(capsys, "verify", "general", "--max-weight", "8")
    assert code == 2
    assert "cap" in err
    code, _, _ = run_cli(capsys, "verify", "general", "--max-weight", "6")
    assert code == 0


def test_verify_jobs_flag(capsys):
    code, out, _ = run_cli(capsys, "verify", "res11", "--max-weight", "7", "--jobs", "2")
    assert code == 0
    assert "[PASS]" in out


def test_verify_all(capsys):
    code, out, _ = run_cli(capsys, "verify", "all", "--max-weight", "6")
    assert code == 0
    assert out.count("[PASS]") == 7


def test_verify_deterministic_output(capsys):
    runs = {run_cli(capsys, "verify", "res11", "--max-weight", "6")[1] for _ in range(2)}
    assert len(runs) == 1


def test_verify_reports_failure_with_exit_1(capsys, monkeypatch):
    from mzvshuffle import verify

    def fake_run_suite(name, max_weight=None, jobs=1):
        return verify.VerifyReport(
            suite=name, grid="stub", checked=3, failures=["mismatch at (1,1)"]
        )

    monkeypatch.setattr(verify, "run_suite", fake_run_suite)
    code, out, _ = run_cli(capsys, "verify", "res11")
    assert code == 1
    assert "[FAIL]" in out
    assert "first failure: mismatch at (1,1)" in out


def test_console_script_installed():
    import shutil
    import subprocess

    exe = shutil.which("mzvshuffle")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run(
        [exe, "shuffle", "xy", "y"], capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "yxy + 2*xy^2"
