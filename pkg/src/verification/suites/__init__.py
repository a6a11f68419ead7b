"""Verification suites; importing this package registers every suite."""

from src.verification.suites.base import VerificationSuite
from src.verification.suites.registry import SuiteRegistry

# Import suites to trigger registration
from src.verification.suites import gutzmer, image, kaverage, lemmas, mehler, ortho  # noqa: F401, E402

__all__ = [
    "VerificationSuite",
    "SuiteRegistry",
]
