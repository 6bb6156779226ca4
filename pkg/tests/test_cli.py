"""Command-line behaviour: formats, sweeps, config handling, exit codes."""

import json
import os
import subprocess
import sys

import pytest

from qaplan.cli import EXIT_CONFIG, EXIT_DOMAIN, EXIT_OK, EXIT_WARNINGS, main
from qaplan.config import ENV_CONFIG_PATH
from qaplan.emit import read_csv, read_json
from qaplan.tables import PAPER_TABLES


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv(ENV_CONFIG_PATH, raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_default_run_exits_clean(capsys):
    code, out, err = run(capsys, "targets", "--format", "csv")
    assert code == EXIT_OK
    assert err == ""
    table = read_csv(out)
    assert table.rows[0]["name"] == "5g-400mhz-64ant"
    assert table.rows[0]["total_tops"] == 4070.4


def test_output_is_byte_identical_across_runs(capsys):
    _, first, _ = run(capsys, "power", "--format", "json")
    _, second, _ = run(capsys, "power", "--format", "json")
    assert first == second


def test_output_stable_under_hash_randomization(tmp_path):
    # dict/set iteration order must never leak into emissions
    outputs = []
    for seed in ("1", "42"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        env.pop(ENV_CONFIG_PATH, None)
        proc = subprocess.run(
            [sys.executable, "-m", "qaplan.cli", "economics",
             "--sweep", "bandwidth_mhz=100,400", "--format", "json"],
            capture_output=True, text=True, env=env,
        )
        assert proc.returncode == EXIT_OK, proc.stderr
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]


def test_csv_and_json_agree_numerically(capsys):
    _, csv_text, _ = run(capsys, "qubits", "--format", "csv")
    _, json_text, _ = run(capsys, "qubits", "--format", "json")
    csv_rows = read_csv(csv_text).rows
    json_rows = read_json(json_text).rows
    assert len(csv_rows) == len(json_rows) == 1
    for key, value in csv_rows[0].items():
        assert json_rows[0][key] == value


def test_out_flag_matches_stdout(tmp_path, capsys):
    path = tmp_path / "report.csv"
    code, out, _ = run(capsys, "qubits", "--format", "csv", "--out", str(path))
    assert code == EXIT_OK
    assert out == ""
    _, streamed, _ = run(capsys, "qubits", "--format", "csv")
    assert path.read_bytes().decode("utf-8") == streamed


def test_sweep_expands_grid(capsys):
    code, out, err = run(
        capsys, "targets", "--format", "csv",
        "--sweep", "bandwidth_mhz=50,100", "--sweep", "antennas=32,64",
    )
    assert code == EXIT_OK
    rows = read_csv(out).rows
    assert len(rows) == 4
    names = [r["name"] for r in rows]
    assert "5g-400mhz-64ant[bandwidth_mhz=50,antennas=32]" in names


def test_sweep_skips_invalid_points_with_warning(capsys):
    code, out, err = run(
        capsys, "targets", "--format", "csv", "--sweep", "coding_rate=0.5,1.5",
    )
    assert code == EXIT_WARNINGS
    assert "skipping sweep point" in err
    assert len(read_csv(out).rows) == 1


def test_sweep_with_no_valid_points_is_config_error(capsys):
    code, _, err = run(capsys, "targets", "--sweep", "coding_rate=1.5")
    assert code == EXIT_CONFIG
    assert "config error" in err


@pytest.mark.parametrize("flag", ["nonsense", "bandwidth_mhz", "volume=11"])
def test_malformed_sweep_is_config_error(capsys, flag):
    code, _, err = run(capsys, "targets", "--sweep", flag)
    assert code == EXIT_CONFIG
    assert "config error" in err


def test_capacity_warning_sets_exit_code(capsys):
    code, out, err = run(
        capsys, "qubits", "--format", "csv", "--sweep", "antennas=512",
    )
    assert code == EXIT_WARNINGS
    assert "exceeds refrigerator capacity" in err
    assert read_csv(out).rows[0]["fits"] == "no"


def test_missing_config_file_is_config_error(capsys):
    code, _, err = run(capsys, "targets", "--config", "/no/such/file.json")
    assert code == EXIT_CONFIG
    assert "config error" in err


def test_invalid_json_config_is_config_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    code, _, err = run(capsys, "targets", "--config", str(path))
    assert code == EXIT_CONFIG


def test_unknown_config_key_is_config_error(tmp_path, capsys):
    path = tmp_path / "typo.json"
    path.write_text(json.dumps({"scenarois": []}), encoding="utf-8")
    code, _, err = run(capsys, "targets", "--config", str(path))
    assert code == EXIT_CONFIG
    assert "scenarois" in err


def test_wrong_schema_version_is_config_error(tmp_path, capsys):
    path = tmp_path / "v9.json"
    path.write_text(json.dumps({"schema_version": 9}), encoding="utf-8")
    code, _, err = run(capsys, "targets", "--config", str(path))
    assert code == EXIT_CONFIG


def test_domain_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad_horizon.json"
    path.write_text(json.dumps({"horizons_years": [-1]}), encoding="utf-8")
    code, _, err = run(capsys, "economics", "--config", str(path))
    assert code == EXIT_DOMAIN
    assert "model error" in err


def test_unwritable_output_is_config_error(tmp_path, capsys):
    target = tmp_path / "missing_dir" / "out.csv"
    code, _, err = run(capsys, "targets", "--out", str(target))
    assert code == EXIT_CONFIG
    assert "cannot write output" in err


def test_usage_errors_exit_one(capsys):
    for argv in ([], ["frobnicate"], ["targets", "--format", "xml"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == EXIT_CONFIG
        capsys.readouterr()


def test_env_var_points_at_config(tmp_path, monkeypatch, capsys):
    path = tmp_path / "env.json"
    path.write_text(json.dumps({
        "scenarios": [{"name": "small", "bandwidth_mhz": 100, "antennas": 32}],
    }), encoding="utf-8")
    monkeypatch.setenv(ENV_CONFIG_PATH, str(path))
    code, out, _ = run(capsys, "targets", "--format", "csv")
    assert code == EXIT_OK
    assert read_csv(out).rows[0]["name"] == "small"


def test_config_flag_beats_env_var(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(ENV_CONFIG_PATH, "/no/such/file.json")
    path = tmp_path / "real.json"
    path.write_text(json.dumps({"samples": 50}), encoding="utf-8")
    code, out, _ = run(capsys, "qubits", "--format", "csv", "--config", str(path))
    assert code == EXIT_OK
    assert read_csv(out).rows[0]["samples"] == 50


def test_config_sweep_used_when_no_flag(tmp_path, capsys):
    path = tmp_path / "sweep.json"
    path.write_text(json.dumps({"sweep": {"antennas": [32, 64]}}), encoding="utf-8")
    code, out, _ = run(capsys, "targets", "--format", "csv", "--config", str(path))
    assert code == EXIT_OK
    assert len(read_csv(out).rows) == 2


def test_sweep_flag_overrides_config_sweep(tmp_path, capsys):
    path = tmp_path / "sweep.json"
    path.write_text(json.dumps({"sweep": {"antennas": [32, 64]}}), encoding="utf-8")
    code, out, _ = run(
        capsys, "targets", "--format", "csv", "--config", str(path),
        "--sweep", "antennas=128",
    )
    assert code == EXIT_OK
    rows = read_csv(out).rows
    assert len(rows) == 1
    assert rows[0]["antennas"] == 128


@pytest.mark.parametrize("name", sorted(PAPER_TABLES))
def test_reference_reports_emit_in_every_format(name, capsys):
    for fmt in ("csv", "json", "table"):
        code, out, err = run(capsys, "targets", "--paper-table", name, "--format", fmt)
        assert code == EXIT_OK, err
        assert out
    parsed = read_csv(run(capsys, "targets", "--paper-table", name, "--format", "csv")[1])
    assert parsed.rows


def test_reference_reports_skip_config_loading(capsys):
    code, out, _ = run(
        capsys, "targets", "--paper-table", "readout",
        "--config", "/no/such/file.json", "--format", "csv",
    )
    assert code == EXIT_OK


@pytest.mark.parametrize("name", ["targets", "energy", "qubits-time"])
def test_known_print_defects_are_flagged(name, capsys):
    _, out, _ = run(capsys, "targets", "--paper-table", name, "--format", "json")
    notes = json.loads(out)["notes"]
    assert any("paper-inconsistent" in n for n in notes)
