"""Run verification suites and stream their records as JSON lines."""

import logging
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from typing import TextIO

from src.exceptions import HermiteGutzmerError, InputError
from src.verification.models import (
    Case,
    ReportHeader,
    RunConfig,
    RunSummary,
    SuiteSelection,
    VerificationRecord,
)
from src.verification.suites import SuiteRegistry, VerificationSuite

logger = logging.getLogger(__name__)


def selected_suites(config: RunConfig) -> list[VerificationSuite]:
    """Suites named by the configuration; ``all`` means every registered suite in name order."""
    if config.suite == SuiteSelection.ALL:
        names = SuiteRegistry.list_suites()
    else:
        names = [config.suite.value]
    suites = []
    for name in names:
        suite = SuiteRegistry.get_suite(name)
        if suite is None:
            raise InputError(f"unknown suite '{name}'")
        suites.append(suite)
    return suites


def evaluate_case(suite: str, case: Case) -> VerificationRecord:
    """Evaluate one instance; any exception becomes a failed record."""
    try:
        comparison = case.evaluate()
    except HermiteGutzmerError as e:
        logger.warning(f"{suite}/{case.name} raised {type(e).__name__}: {e}")
        return VerificationRecord.from_error(suite, case, e)
    except Exception as e:
        logger.error(f"{suite}/{case.name} failed unexpectedly: {type(e).__name__}: {e}", exc_info=True)
        return VerificationRecord.from_error(suite, case, e)
    record = VerificationRecord.from_comparison(suite, case, comparison)
    logger.debug(f"{suite}/{case.name}: error={record.error:.3e} tolerance={record.tolerance:.3e}")
    return record


def iter_records(config: RunConfig) -> Iterator[VerificationRecord]:
    """Records of every selected suite, in instance order regardless of completion order."""
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        for suite in selected_suites(config):
            cases = suite.cases(config)
            logger.info(f"Running suite '{suite.name}' ({len(cases)} cases)")
            yield from pool.map(lambda case, name=suite.name: evaluate_case(name, case), cases)


def run(config: RunConfig, stream: TextIO | None = None) -> tuple[RunSummary, list[VerificationRecord]]:
    """Execute the selected suites, writing header, records and summary to ``stream``.

    Only the header carries a timestamp, so identical configurations give identical
    record and summary lines.
    """
    if stream is not None:
        header = ReportHeader(
            started_at=datetime.now(timezone.utc).isoformat(),
            config=config.model_dump(mode="json"),
        )
        stream.write(header.model_dump_json() + "\n")

    records = []
    for record in iter_records(config):
        records.append(record)
        if stream is not None:
            stream.write(record.model_dump_json() + "\n")
            stream.flush()

    failing = [f"{r.suite}/{r.case}" for r in records if not r.passed]
    summary = RunSummary(
        suites=[suite.name for suite in selected_suites(config)],
        total=len(records),
        passed=len(records) - len(failing),
        failed=len(failing),
        failing=failing,
    )
    if stream is not None:
        stream.write(summary.model_dump_json() + "\n")
    logger.info(f"Verification finished: {summary.passed}/{summary.total} passed")
    return summary, records
