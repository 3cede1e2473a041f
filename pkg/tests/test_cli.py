"""End-to-end CLI behaviour: output shapes, exit codes, determinism."""

from __future__ import annotations

import io
import json

import pytest

from coxcert.cli import main

K3_TEXT = "n 3\nedge 1 2\nedge 1 3\nedge 2 3\n"
P3_TEXT = "n 3\nedge 1 2\nedge 2 3\n"


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.diagram"
    path.write_text(K3_TEXT)
    return str(path)


@pytest.fixture
def p3_file(tmp_path):
    path = tmp_path / "p3.diagram"
    path.write_text(P3_TEXT)
    return str(path)


def test_analyze_output(k3_file, capsys):
    assert main(["analyze", k3_file]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "vertices: 3" in out
    assert "edges: 3" in out
    assert any(line.startswith("epsilon: 4095/8192") for line in out)
    assert "D: 1" in out
    assert any(line.startswith("signature at D:") for line in out)


def test_analyze_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(P3_TEXT))
    assert main(["analyze", "-"]) == 0
    assert "vertices: 3" in capsys.readouterr().out


def test_missing_file_is_usage_error(capsys):
    assert main(["analyze", "/nonexistent/nowhere.diagram"]) == 2
    assert "error:" in capsys.readouterr().err


def test_malformed_diagram_is_usage_error(tmp_path, capsys):
    path = tmp_path / "bad.diagram"
    path.write_text("n 3\nedge 1 99\n")
    assert main(["analyze", str(path)]) == 2
    err = capsys.readouterr().err
    assert "line 2" in err


def test_embed_deterministic(k3_file, capsys):
    assert main(["embed", k3_file]) == 0
    first = capsys.readouterr().out
    assert main(["embed", k3_file]) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["format"] == "coxcert-embedding/1"
    assert payload["passed"] is True
    assert payload["m"] == 2
    assert payload["thresholds"]["d_value"] == 1
    assert payload["unit"]["pell"] == {"m": 2, "x": "1", "y": "1", "norm": -1}


def test_embed_timings_on_stderr_only(k3_file, capsys):
    main(["embed", k3_file])
    captured = capsys.readouterr()
    assert "#" not in captured.out
    assert any(line.startswith("# ") for line in captured.err.splitlines())
    json.loads(captured.out)  # stdout is pure JSON


def test_embed_verify_round_trip(k3_file, tmp_path, capsys):
    cert = tmp_path / "k3.json"
    assert main(["embed", k3_file, "--out", str(cert)]) == 0
    capsys.readouterr()
    assert main(["verify", str(cert), k3_file]) == 0
    out = capsys.readouterr().out
    assert "certificate verified" in out


def test_verify_rejects_tampered_certificate(k3_file, tmp_path, capsys):
    cert = tmp_path / "k3.json"
    main(["embed", k3_file, "--out", str(cert)])
    payload = json.loads(cert.read_text())
    payload["unit"]["alpha"]["a"] = "17/1"
    cert.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    capsys.readouterr()
    assert main(["verify", str(cert), k3_file]) == 1
    assert "failed:" in capsys.readouterr().err


def test_verify_rejects_wrong_diagram(k3_file, p3_file, tmp_path, capsys):
    cert = tmp_path / "k3.json"
    main(["embed", k3_file, "--out", str(cert)])
    capsys.readouterr()
    assert main(["verify", str(cert), p3_file]) == 1
    assert "different diagram" in capsys.readouterr().err


def test_verify_rejects_non_certificate(k3_file, tmp_path, capsys):
    cert = tmp_path / "junk.json"
    cert.write_text('{"format": "something-else"}\n')
    assert main(["verify", str(cert), k3_file]) == 2
    cert.write_text("not json at all")
    assert main(["verify", str(cert), k3_file]) == 2


def test_density_command(p3_file, capsys):
    assert main(["density", p3_file, "--d", "2"]) == 0
    out = capsys.readouterr().out
    assert "dimension trace: 2 -> 3" in out
    assert "final dimension: 3 of 3" in out
    assert out.rstrip().endswith("PASS")


def test_density_degenerate_point_fails(k3_file, capsys):
    assert main(["density", k3_file, "--d", "1/2"]) == 1
    assert "failed:" in capsys.readouterr().err


def test_density_bad_parameter_is_usage_error(k3_file, capsys):
    assert main(["density", k3_file, "--d", "banana"]) == 2
    assert "not a rational number" in capsys.readouterr().err


def test_words_command(p3_file, capsys):
    assert main(["words", p3_file, "--max-len", "3"]) == 0
    out = capsys.readouterr().out
    assert "word counts: 1 3 5 8" in out
    assert "faithfulness probe: PASS" in out


def test_words_negative_length_is_usage_error(p3_file, capsys):
    assert main(["words", p3_file, "--max-len", "-1"]) == 2


def test_cycle_command(capsys):
    assert main(["cycle", "--n", "5"]) == 0
    out = capsys.readouterr().out
    assert "n 5" in out
    assert "D: 2" in out
    assert "circulant identity: pass" in out
    assert out.rstrip().endswith("PASS")


def test_cycle_too_small_is_usage_error(capsys):
    assert main(["cycle", "--n", "4"]) == 2


def test_console_script_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "coxcert", "analyze", "-"],
        input=K3_TEXT,
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "vertices: 3" in proc.stdout
