import json
import subprocess
import sys

import pytest

from grouptrees.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_kappa_psl27(capsys):
    code, out, _ = run(capsys, "kappa", "--graph", "power", "--group", "PSL2:7")
    assert code == 0
    assert "factored: 2^84 * 3^28 * 7^40" in out
    assert f"kappa: {2**84 * 3**28 * 7**40}" in out
    code, out, _ = run(capsys, "kappa", "--graph", "power", "--group", "PSL2:7", "--quiet")
    assert out == "2^84 * 3^28 * 7^40\n"


def test_kappa_json_and_modular(capsys):
    code, out, _ = run(capsys, "kappa", "--graph", "commuting", "--group", "Q:8", "--json", "--method", "modular")
    payload = json.loads(out)
    assert payload["kappa"] == "2048" and payload["factored"] == "2^11" and payload["vertices"] == 8


def test_kappa_nonidentity_disconnected(capsys):
    code, out, _ = run(capsys, "kappa", "--graph", "power", "--group", "S:3", "--subset", "nonidentity", "--quiet")
    assert code == 0 and out == "0\n"


def test_spectrum(capsys):
    code, out, _ = run(capsys, "spectrum", "E(2) * E(3)")
    assert code == 0
    assert "kappa: 12" in out and "spectrum: {5, 3, 2^2, 0}" in out
    code, out, _ = run(capsys, "spectrum", "E(2) * E(3)", "--quiet")
    assert out == "12\n"


def test_spectrum_bad_expression(capsys):
    code, _, err = run(capsys, "spectrum", "K(2")
    assert code == 2 and "error" in err


def test_suzuki(capsys):
    code, out, _ = run(capsys, "suzuki", "--n", "1", "--check-sylow", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["kappa_sylow"] == "2^256"
    assert payload["kappa_suzuki"] == "2^16640 * 5^4368 * 7^10400 * 13^6160"
    assert payload["spectral_route_agrees"] and payload["sylow_matrix_tree_agrees"]
    code, _, _ = run(capsys, "suzuki", "--n", "2", "--check-sylow")
    assert code == 2
    code, _, _ = run(capsys, "suzuki", "--n", "0")
    assert code == 2


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--group", "Z:4", "--n", "1", "--quiet")
    assert code == 0 and out == "NOT_FOUND\n"
    code, out, _ = run(capsys, "decompose", "--group", "D:8", "--n", "1", "--json")
    payload = json.loads(out)
    assert payload["status"] == "FOUND" and len(payload["C"]) == 4 and len(payload["blocks"][0]) == 4


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--group", "Q:8")
    assert code == 0
    assert "census: 1:1 2:1 4:6" in out and "GeneralizedQuaternion" in out and "involutions: 1" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "suzuki", "--quiet")
    assert code == 0 and out == "8 0\n"
    code, _, _ = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_verify_fingerprints_reports_failure(capsys):
    # the A:5 target value does not reproduce; the suite must say so
    code, out, _ = run(capsys, "verify", "--suite", "fingerprints", "--json")
    payload = json.loads(out)
    assert code == 1 and payload["failures"] == ["kappa_P(A:5) = 2^20 * 3^10 * 5^18"]


def test_usage_errors(capsys):
    assert run(capsys, "kappa", "--graph", "power", "--group", "Q:12")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["kappa", "--group", "Z:3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["kappa", "--graph", "power", "--group", "Z:3", "--json", "--quiet"])


def test_bad_cayley_file(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2\n0 1\n1 1\n")
    code, _, err = run(capsys, "kappa", "--graph", "power", "--group", f"file:{path}")
    assert code == 1 and "error" in err


def test_trial_bound_env(capsys, monkeypatch):
    monkeypatch.setenv("KAPPA_TRIAL_BOUND", "5")
    _, out, _ = run(capsys, "kappa", "--graph", "power", "--group", "Z:7", "--quiet")
    assert out == "[16807]\n"


def test_output_is_byte_identical():
    cmd = [sys.executable, "-m", "grouptrees.cli", "census", "--group", "A:4", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["order"] == 12
