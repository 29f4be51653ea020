"""Command-line interface: schemas, exit codes, determinism."""

import json

import pytest

from g2gen.cli import main

TINY = {"q": 3, "f": [1, 0, 0, 0, 0, 1]}


@pytest.fixture
def curve_file(tmp_path):
    path = tmp_path / "curve.json"
    path.write_text(json.dumps(TINY))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip().startswith("{") else out


def test_info(capsys, curve_file):
    code, rep = run(capsys, ["info", curve_file])
    assert code == 0
    assert rep["order"] == 10
    assert rep["s"] == 0 and rep["t"] == 0
    assert rep["version"]
    assert len(rep["input_sha256"]) == 64


def test_info_with_ell(capsys, curve_file):
    code, rep = run(capsys, ["info", curve_file, "--ell", "5"])
    assert code == 0
    assert rep["classification"]["k"] == 4
    assert rep["four_tau_k"] % 5 == 0


def test_info_ell_not_dividing(capsys, curve_file):
    code, rep = run(capsys, ["info", curve_file, "--ell", "7"])
    assert code == 0
    assert rep["diagnostic"] == "ell does not divide P(1)"


def test_classify(capsys, curve_file):
    code, rep = run(capsys, ["classify", curve_file, "--ell", "5"])
    assert code == 0
    assert rep["classification"]["in_class"] is True
    assert "admissible" in rep["summary"]


def test_classify_precondition_exit_code(capsys, curve_file):
    code, _ = run(capsys, ["classify", curve_file, "--ell", "3"])
    assert code == 3


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _ = run(capsys, ["info", str(bad)])
    assert code == 4
    missing = tmp_path / "missing.json"
    code, _ = run(capsys, ["info", str(missing)])
    assert code == 4


def test_generators_deterministic(capsys, curve_file):
    code1, rep1 = run(capsys, ["generators", curve_file, "--ell", "5", "--seed", "99"])
    code2, rep2 = run(capsys, ["generators", curve_file, "--ell", "5", "--seed", "99"])
    assert code1 == code2 == 0
    assert rep1 == rep2
    assert rep1["verified"] is True
    m = rep1["frobenius_matrix"]
    assert all(m[i][j] == 0 for i in range(4) for j in range(4) if i != j)


def test_generators_seed_env(monkeypatch, capsys, curve_file):
    monkeypatch.setenv("G2GEN_SEED", "123")
    code1, rep1 = run(capsys, ["generators", curve_file, "--ell", "5"])
    code2, rep2 = run(capsys, ["generators", curve_file, "--ell", "5", "--seed", "123"])
    assert code1 == code2 == 0
    assert rep1 == rep2


def test_verify_roundtrip(tmp_path, capsys, curve_file):
    code, rep = run(capsys, ["generators", curve_file, "--ell", "5", "--seed", "7"])
    assert code == 0
    report = tmp_path / "gens.json"
    report.write_text(json.dumps(rep))
    code, ver = run(capsys, ["verify", curve_file, str(report)])
    assert code == 0
    assert ver["verified"] is True
    assert ver["matches_report"] is True


def test_verify_rejects_tampered_report(tmp_path, capsys, curve_file):
    code, rep = run(capsys, ["generators", curve_file, "--ell", "5", "--seed", "7"])
    # duplicate one point: no longer a basis
    rep["points"][3] = rep["points"][2]
    report = tmp_path / "gens.json"
    report.write_text(json.dumps(rep))
    code, ver = run(capsys, ["verify", curve_file, str(report)])
    assert code == 3
    assert ver["verified"] is False


def test_selftest(capsys):
    code, rep = run(capsys, ["selftest", "--seed", "5", "--limit", "1"])
    assert code == 0
    assert rep["ok"] is True
