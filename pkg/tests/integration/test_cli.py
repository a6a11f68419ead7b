"""End-to-end tests for the command-line interface."""

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from src.cli.commands import app
from src.spectral.io import FORMAT_HEADER, load_expansion

runner = CliRunner()

FIXTURE = Path(__file__).resolve().parents[2] / "data" / "expansions" / "h0_plus_half_h3"


def record_lines(path):
    return [line for line in path.read_text().splitlines() if json.loads(line)["kind"] != "header"]


class TestSuiteCommands:
    """Tests for the suite commands and their exit codes."""

    def test_mehler_passes(self):
        result = runner.invoke(app, ["mehler"])
        assert result.exit_code == 0, result.output
        assert "Verification summary" in result.output

    def test_failures_exit_one(self):
        result = runner.invoke(app, ["gutzmer", "--rtol", "0", "--k-max", "4", "--grid-points", "2"])
        assert result.exit_code == 1
        assert "Failing records" in result.output

    def test_invalid_field_exits_two(self):
        result = runner.invoke(app, ["mehler", "--k-max=-1"])
        assert result.exit_code == 2
        assert "k_max" in result.output

    def test_missing_seed_exits_two(self):
        result = runner.invoke(app, ["kaverage"])
        assert result.exit_code == 2
        assert "seed is required" in result.output

    def test_malformed_config_file(self, tmp_path):
        path = tmp_path / "run.conf"
        path.write_text("k-max = 4\nnot a setting\n")
        result = runner.invoke(app, ["mehler", "--config", str(path)])
        assert result.exit_code == 2
        assert "Config error" in result.output

    def test_flags_override_config_file(self, tmp_path, report_path):
        path = tmp_path / "run.conf"
        path.write_text("strict-rtol = 0\n")
        result = runner.invoke(
            app, ["mehler", "--config", str(path), "--strict-rtol", "1e-10", "--out", str(report_path)]
        )
        assert result.exit_code == 0, result.output
        header = json.loads(report_path.read_text().splitlines()[0])
        assert header["config"]["strict_rtol"] == 1e-10

    def test_report_is_reproducible(self, tmp_path):
        first, second = tmp_path / "first.jsonl", tmp_path / "second.jsonl"
        assert runner.invoke(app, ["mehler", "--out", str(first)]).exit_code == 0
        assert runner.invoke(app, ["mehler", "--out", str(second), "--workers", "3"]).exit_code == 0

        assert record_lines(first) == record_lines(second)
        summary = json.loads(first.read_text().splitlines()[-1])
        assert summary["kind"] == "summary"
        assert summary["total"] == 75

    def test_unwritable_report_path(self, tmp_path):
        result = runner.invoke(app, ["mehler", "--out", str(tmp_path / "missing" / "report.jsonl")])
        assert result.exit_code == 2
        assert "Cannot write report" in result.output

    def test_list_suites(self):
        result = runner.invoke(app, ["suites"])
        assert result.exit_code == 0
        for name in ["gutzmer", "image", "kaverage", "lemmas", "mehler", "ortho"]:
            assert name in result.output


class TestExpansionCommands:
    """Tests for inspecting and smoothing expansion files."""

    def test_inspect(self):
        result = runner.invoke(app, ["inspect-expansion", str(FIXTURE)])
        assert result.exit_code == 0, result.output
        assert "1.25" in result.output

    def test_inspect_missing_file(self, tmp_path):
        result = runner.invoke(app, ["inspect-expansion", str(tmp_path / "missing")])
        assert result.exit_code == 2

    def test_inspect_malformed_file(self, tmp_path):
        path = tmp_path / "broken"
        path.write_text(f"{FORMAT_HEADER}\nn 1\nk_max 1\n0 1.0\n")
        result = runner.invoke(app, ["inspect-expansion", str(path)])
        assert result.exit_code == 2

    @pytest.mark.parametrize("poisson", [False, True])
    def test_smooth(self, tmp_path, poisson):
        target = tmp_path / "smoothed"
        args = ["smooth-expansion", str(FIXTURE), str(target), "--t", "0.5"]
        result = runner.invoke(app, args + (["--poisson"] if poisson else []))
        assert result.exit_code == 0, result.output

        smoothed = load_expansion(target)
        assert smoothed.norm_squared() < 1.25
        assert smoothed.levels() == [0, 3]

    def test_smooth_rejects_non_positive_time(self, tmp_path):
        result = runner.invoke(app, ["smooth-expansion", str(FIXTURE), str(tmp_path / "out"), "--t", "0"])
        assert result.exit_code == 2
