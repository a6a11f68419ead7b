"""Verification runs: configuration, suites and JSON-lines reports."""

from src.verification.config_file import load_config_file, parse_config_text
from src.verification.models import (
    Case,
    Comparison,
    Measure,
    ReportHeader,
    RunConfig,
    RunSummary,
    SuiteSelection,
    VerificationRecord,
)
from src.verification.runner import evaluate_case, iter_records, run, selected_suites
from src.verification.suites import SuiteRegistry, VerificationSuite

__all__ = [
    # Configuration
    "RunConfig",
    "SuiteSelection",
    "load_config_file",
    "parse_config_text",
    # Records
    "Case",
    "Comparison",
    "Measure",
    "VerificationRecord",
    "ReportHeader",
    "RunSummary",
    # Suites
    "VerificationSuite",
    "SuiteRegistry",
    # Runner
    "run",
    "iter_records",
    "evaluate_case",
    "selected_suites",
]
