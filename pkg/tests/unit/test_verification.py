"""Tests for run configuration, config files, the suite registry and the runner."""

import io
import json
import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.exceptions import ConfigFileError, DomainError
from src.verification import (
    Case,
    Comparison,
    Measure,
    RunConfig,
    SuiteRegistry,
    SuiteSelection,
    VerificationRecord,
    VerificationSuite,
    evaluate_case,
    load_config_file,
    parse_config_text,
    run,
    selected_suites,
)
from src.verification.suites.lemmas import growth_ratios, growth_slope
from src.verification.suites.samples import lemma_points, phase_grid, sample_expansion


@pytest.fixture
def restore_registry():
    """Snapshot the registry and restore it after the test."""
    saved = dict(SuiteRegistry._suites)
    yield
    SuiteRegistry._suites.clear()
    SuiteRegistry._suites.update(saved)


class TestRunConfig:
    """Tests for RunConfig validation."""

    def test_deterministic_suite_defaults(self):
        config = RunConfig(suite=SuiteSelection.MEHLER)
        assert config.n == 1
        assert config.k_max == 12
        assert config.seed is None
        assert not config.uses_monte_carlo

    @pytest.mark.parametrize(
        "values",
        [
            {"suite": "all"},
            {"suite": "kaverage"},
            {"suite": "gutzmer", "n": 2},
        ],
    )
    def test_seed_required_for_monte_carlo(self, values):
        with pytest.raises(ValidationError) as exc_info:
            RunConfig(**values)

        assert "seed is required" in str(exc_info.value)

    def test_one_dimensional_gutzmer_needs_no_seed(self):
        assert RunConfig(suite="gutzmer", n=1).seed is None

    def test_string_values_from_files(self):
        config = RunConfig.model_validate({"suite": "gutzmer", "n": "2", "seed": "7", "rtol": "1e-8"})
        assert config.n == 2
        assert config.seed == 7
        assert config.rtol == 1e-8

    @pytest.mark.parametrize(
        "field,value",
        [("k_max", -1), ("n", 4), ("rtol", -1.0), ("workers", 0), ("seed", -5), ("grid_radius", 0.0)],
    )
    def test_invalid_values(self, field, value):
        with pytest.raises(ValidationError) as exc_info:
            RunConfig(suite="mehler", **{field: value})

        assert exc_info.value.errors()[0]["loc"] == (field,)

    def test_unknown_field(self):
        with pytest.raises(ValidationError):
            RunConfig(suite="mehler", tolerance=1e-3)

    def test_quadrature_options(self):
        config = RunConfig(suite="kaverage", seed=11, mc_samples=500, gh_order=30, rtol=1e-7)
        options = config.quadrature_options()
        assert options.seed == 11
        assert options.mc_samples == 500
        assert options.gh_order == 30
        assert options.rtol == 1e-7
        assert config.quadrature_options(gh_order=None).gh_order is None


class TestConfigFile:
    """Tests for key-value configuration files."""

    def test_parse(self):
        text = "# run settings\nsuite = gutzmer\n\nk-max = 8  # truncation\nseed=3\n"
        assert parse_config_text(text) == {"suite": "gutzmer", "k_max": "8", "seed": "3"}

    @pytest.mark.parametrize(
        "text,line",
        [
            ("suite gutzmer\n", 1),
            ("suite = gutzmer\n = 3\n", 2),
            ("suite = gutzmer\n\nseed =\n", 3),
            ("# header\nsuite = gutzmer\nbogus = 1\n", 3),
            ("seed = 1\nseed = 2\n", 2),
        ],
    )
    def test_errors_name_the_line(self, text, line):
        with pytest.raises(ConfigFileError) as exc_info:
            parse_config_text(text)

        assert exc_info.value.line == line
        assert str(exc_info.value).startswith(f"line {line}:")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigFileError) as exc_info:
            load_config_file(tmp_path / "missing.conf")

        assert exc_info.value.line == 0

    def test_load(self, tmp_path):
        path = tmp_path / "run.conf"
        path.write_text("suite = mehler\nworkers = 2\n")
        assert RunConfig.model_validate(load_config_file(path)).workers == 2


class TestComparison:
    """Tests for comparisons and records."""

    def test_relative(self):
        comparison = Comparison.relative(1.0 + 1e-9, 1.0, 1e-8)
        assert comparison.error == pytest.approx(1e-9)
        assert comparison.measure == Measure.RELATIVE
        assert comparison.passed

    def test_relative_with_scale(self):
        comparison = Comparison.relative(1e-3, 0.0, 1e-2, scale=1.0)
        assert comparison.error == pytest.approx(1e-3)

    def test_non_finite_error_fails(self):
        assert not Comparison(1.0, 1.0, math.inf, 1.0).passed
        assert not Comparison(1.0, 1.0, math.nan, 1.0).passed

    def test_record_from_comparison(self):
        case = Case("c", {"k": 1}, lambda: Comparison.relative(2.0, 2.0, 0.0))
        record = VerificationRecord.from_comparison("s", case, case.evaluate())
        assert record.lhs == [2.0, 0.0]
        assert record.passed
        assert json.loads(record.model_dump_json())["measure"] == "relative"

    def test_record_from_error(self):
        case = Case("c", {}, lambda: Comparison.relative(0.0, 0.0, 0.0))
        record = VerificationRecord.from_error("s", case, DomainError("outside"))
        assert not record.passed
        assert record.message == "DomainError: outside"
        assert record.error is None


class TestSuiteRegistry:
    """Tests for SuiteRegistry."""

    def test_builtin_suites(self):
        assert SuiteRegistry.list_suites() == ["gutzmer", "image", "kaverage", "lemmas", "mehler", "ortho"]

    def test_get_suite(self):
        suite = SuiteRegistry.get_suite("Mehler")
        assert isinstance(suite, VerificationSuite)
        assert suite.name == "mehler"
        assert suite.description

    def test_unknown_suite(self):
        assert SuiteRegistry.get_suite("nonexistent") is None

    def test_register_custom_suite(self, restore_registry):
        @SuiteRegistry.register
        class ConstantSuite(VerificationSuite):
            @property
            def name(self) -> str:
                return "constant"

            def cases(self, config):
                return [Case("one", {}, lambda: Comparison.relative(1.0, 1.0, 0.0))]

        assert "constant" in SuiteRegistry.list_suites()
        assert SuiteRegistry.get_suite("constant").description == ""

    def test_clear(self, restore_registry):
        SuiteRegistry.clear()
        assert SuiteRegistry.list_suites() == []

    def test_selection_all(self):
        names = [suite.name for suite in selected_suites(RunConfig(suite="all", seed=1))]
        assert names == SuiteRegistry.list_suites()


class TestSamples:
    """Tests for the deterministic inputs shared by the suites."""

    def test_phase_grid_deterministic(self):
        first = phase_grid(5, 1, 1.5)
        second = phase_grid(5, 1, 1.5)
        assert all(a == b for a, b in zip(first, second, strict=True))

    def test_phase_grid_inside_box(self):
        for p in phase_grid(30, 2, 1.5):
            parts = np.concatenate([p.x, p.y, p.u, p.v])
            assert np.all(np.abs(parts) < 1.5)
            assert p.n == 2

    def test_sample_expansion_fills_every_index(self):
        F = sample_expansion(2, 4, 1)
        assert len(F.coeffs) == 15
        assert all(c != 0 for c in F.coeffs.values())
        assert sample_expansion(2, 4, 1) == F
        assert sample_expansion(2, 4, 2) != F

    def test_lemma_points(self):
        assert len(lemma_points()) == 6


class TestGutzmerSuiteCases:
    """Tests for the instances the gutzmer suite enumerates."""

    def test_monte_carlo_covers_the_phase_grid(self):
        config = RunConfig(suite="gutzmer", n=2, seed=3)
        names = [case.name for case in SuiteRegistry.get_suite("gutzmer").cases(config)]
        monte_carlo = [name for name in names if name.startswith("n=2 Monte Carlo")]
        assert len(monte_carlo) == config.grid_points >= 20
        assert len(set(monte_carlo)) == len(monte_carlo)

    def test_one_dimension_has_no_monte_carlo(self):
        names = [case.name for case in SuiteRegistry.get_suite("gutzmer").cases(RunConfig(suite="gutzmer"))]
        assert not any("Monte Carlo" in name for name in names)
        assert sum(name.startswith("n=1 sample=") for name in names) == 60


class TestGrowthModel:
    """Tests for the growth diagnostics of the lemmas suite."""

    @pytest.mark.parametrize("y", [0.5, 2.0, 3.0])
    def test_sharp_rate_slope(self, y):
        assert growth_slope(growth_ratios(y)) <= 1e-3

    def test_unit_rate_slope_positive(self):
        assert growth_slope(growth_ratios(2.0, rate=1.0)) > 0


class TestRunner:
    """Tests for evaluating cases and writing reports."""

    def test_library_errors_become_failed_records(self):
        def raises():
            raise DomainError("outside the tube")

        record = evaluate_case("s", Case("bad", {"t": 1.0}, raises))
        assert not record.passed
        assert "outside the tube" in record.message
        assert record.inputs == {"t": 1.0}

    def test_unexpected_errors_become_failed_records(self):
        def raises():
            raise ZeroDivisionError("division by zero")

        record = evaluate_case("s", Case("broken", {}, raises))
        assert not record.passed
        assert record.message == "ZeroDivisionError: division by zero"

    def test_failing_case_does_not_stop_the_report(self, restore_registry):
        def raises():
            raise RuntimeError("boom")

        @SuiteRegistry.register
        class MehlerSuite(VerificationSuite):
            @property
            def name(self) -> str:
                return "mehler"

            def cases(self, config):
                return [
                    Case("broken", {}, raises),
                    Case("fine", {}, lambda: Comparison.relative(1.0, 1.0, 0.0)),
                ]

        stream = io.StringIO()
        summary, records = run(RunConfig(suite="mehler"), stream)
        assert [r.passed for r in records] == [False, True]
        assert summary.failing == ["mehler/broken"]
        assert len(stream.getvalue().splitlines()) == 4

    def test_mehler_report(self):
        stream = io.StringIO()
        summary, records = run(RunConfig(suite="mehler"), stream)
        lines = [json.loads(line) for line in stream.getvalue().splitlines()]

        assert summary.ok
        assert summary.suites == ["mehler"]
        assert summary.total == len(records) == 75
        assert lines[0]["kind"] == "header"
        assert lines[0]["config"]["suite"] == "mehler"
        assert [line["kind"] for line in lines[1:-1]] == ["record"] * 75
        assert lines[-1] == json.loads(summary.model_dump_json())

    def test_report_body_is_reproducible(self):
        first, second = io.StringIO(), io.StringIO()
        run(RunConfig(suite="mehler"), first)
        run(RunConfig(suite="mehler", workers=4), second)

        body = first.getvalue().splitlines()[1:]
        assert body[:-1] == second.getvalue().splitlines()[1:-1]
        assert json.loads(body[-1]) == json.loads(second.getvalue().splitlines()[-1])

    def test_failures_are_counted(self):
        summary, records = run(RunConfig(suite="mehler", strict_rtol=0.0))
        assert not summary.ok
        assert summary.failed == sum(not r.passed for r in records)
        assert summary.failing[0].startswith("mehler/")

    def test_orthogonality_suite_passes(self):
        summary, _ = run(RunConfig(suite="ortho"))
        assert summary.ok, summary.failing

    @pytest.mark.slow
    def test_lemmas_suite_passes(self):
        summary, _ = run(RunConfig(suite="lemmas"))
        assert summary.ok, summary.failing

    @pytest.mark.slow
    def test_image_suite_passes(self):
        summary, _ = run(RunConfig(suite="image"))
        assert summary.ok, summary.failing

    @pytest.mark.slow
    def test_gutzmer_suite_passes(self):
        summary, _ = run(RunConfig(suite="gutzmer", k_max=6, grid_points=4))
        assert summary.ok, summary.failing

    @pytest.mark.slow
    def test_kaverage_suite_passes(self):
        summary, _ = run(RunConfig(suite="kaverage", n=2, seed=20240611, mc_samples=4000, mc_sigma=5.0))
        assert summary.ok, summary.failing
