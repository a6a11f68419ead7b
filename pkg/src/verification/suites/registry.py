"""Verification suite registry."""

import logging
from typing import TypeVar

from src.verification.suites.base import VerificationSuite

logger = logging.getLogger(__name__)

T = TypeVar("T", bound=VerificationSuite)


class SuiteRegistry:
    """Registry for verification suites.

    Usage:
        # Register a suite
        @SuiteRegistry.register
        class MehlerSuite(VerificationSuite):
            ...

        # Get suite by name
        suite = SuiteRegistry.get_suite("mehler")
    """

    _suites: dict[str, type[VerificationSuite]] = {}

    @classmethod
    def register(cls, suite_class: type[T]) -> type[T]:
        """Register a suite class.

        Args:
            suite_class: Suite class to register

        Returns:
            The registered class (for decorator pattern)
        """
        try:
            name = suite_class().name
        except TypeError:
            # Abstract classes cannot be instantiated
            name = suite_class.__name__.lower().replace("suite", "")

        cls._suites[name] = suite_class
        logger.debug(f"Registered verification suite: {name}")
        return suite_class

    @classmethod
    def get_suite(cls, name: str) -> VerificationSuite | None:
        """Get suite instance by name, or None if not registered."""
        suite_class = cls._suites.get(name.lower())
        if suite_class:
            return suite_class()
        return None

    @classmethod
    def list_suites(cls) -> list[str]:
        """Registered suite names in name order."""
        return sorted(cls._suites)

    @classmethod
    def clear(cls) -> None:
        """Clear all registered suites (for testing)."""
        cls._suites.clear()
