import json
import os

import pytest

from intertwine.cli import main


def test_verify_suite_exit_zero(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = main(["verify", "--suite", "harmonics", "--seed", "7", "--json", str(path)])
    assert code == 0
    body = json.loads(path.read_text())
    assert body["suite"] == "harmonics"
    assert body["pass"] is True
    assert body["wall_time_s"] is None
    assert all(set(c) >= {"key", "inputs", "closed_form", "oracle", "abs_diff", "tol", "pass"} for c in body["cases"])


def test_verify_report_bytes_deterministic(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--suite", "classical", "--seed", "11", "--json", str(p1)]) == 0
    assert main(["verify", "--suite", "classical", "--seed", "11", "--json", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_verify_bad_suite_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


def test_verify_seed_env_fallback(tmp_path, monkeypatch):
    monkeypatch.setenv("INTERTWINE_SEED", "23")
    path = tmp_path / "r.json"
    assert main(["verify", "--suite", "classical", "--json", str(path)]) == 0
    assert json.loads(path.read_text())["seed"] == 23


def test_tolerances_listing(capsys):
    assert main(["verify", "--tolerances"]) == 0
    out = capsys.readouterr().out
    assert "harmonics" in out and "1.0e-06" in out


def test_mu_table_complex(capsys):
    code = main(["mu", "--place", "complex", "--n0", "0", "--n", "0:4:2", "--y", "0:1:1"])
    assert code == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[0].startswith("place,")
    assert len(out) == 1 + 3 * 2
    # the modulus column is identically one on the axis
    for line in out[1:]:
        assert abs(float(line.split(",")[6]) - 1.0) < 1e-9


def test_mu_table_finite(capsys):
    code = main(["mu", "--place", "finite", "--p", "5", "--n", "0:2", "--y", "0.5", "--format", "json"])
    assert code == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 3
    for row in rows:
        assert abs(row["mu_abs"] - 1.0) < 1e-9


def test_mu_parity_violation_exit_two(capsys):
    assert main(["mu", "--place", "real", "--n0", "0", "--n", "1:1", "--y", "0"]) == 2


def test_mu_finite_requires_prime(capsys):
    assert main(["mu", "--place", "finite", "--n", "0:1", "--y", "0"]) == 2


def test_gauss_table(capsys):
    code = main(["gauss", "--p", "5", "--m-max", "1"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 1 + 3  # three ramified characters mod 5
    for line in lines[1:]:
        assert abs(float(line.split(",")[-1]) - 1.0) < 1e-9


def test_gauss_two_conductors(capsys):
    code = main(["gauss", "--p", "3", "--m-max", "2"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    ms = [int(line.split(",")[1]) for line in lines[1:]]
    assert set(ms) == {1, 2}


def test_gauss_p2_gate(capsys):
    assert main(["gauss", "--p", "2"]) == 2
    assert main(["gauss", "--p", "2", "--allow-p2", "--m-max", "3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    data = [line for line in lines if line[0].isdigit()]
    for line in data:
        assert abs(float(line.split(",")[-1]) - 1.0) < 1e-9
