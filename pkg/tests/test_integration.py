import json

import pytest
from click.testing import CliRunner

from src.cli.main import cli


@pytest.mark.integration
def test_verify_writes_reports(tmp_path, monkeypatch):
    monkeypatch.setenv("HEISENBERG_VERIFY_SEED", "11")
    runner = CliRunner()
    result = runner.invoke(cli, ["verify", "--suite", "crossed", "--scale", "0.01",
                                 "--report-dir", str(tmp_path)])

    assert result.exit_code == 0, result.output
    assert "cases passed" in result.output
    with open(tmp_path / "report_crossed_11.json") as f:
        report = json.load(f)
    assert report["passed"] is True
    assert report["seed"] == 11
    with open(tmp_path / "summary.json") as f:
        summary = json.load(f)
    assert summary["total_failures"] == 0
    assert summary["total_cases"] == report["cases_run"]


@pytest.mark.integration
def test_verify_is_reproducible(tmp_path):
    runner = CliRunner()
    runs = []
    for name in ("first", "second"):
        out = tmp_path / name
        result = runner.invoke(cli, ["verify", "--suite", "residue", "--seed", "5",
                                     "--scale", "0.05", "--emitter", "json",
                                     "--report-dir", str(out)])
        assert result.exit_code == 0, result.output
        with open(out / "report_residue_5.json") as f:
            report = json.load(f)
        runs.append((report["checks"], report["discrepancies"]))
    assert runs[0] == runs[1]
