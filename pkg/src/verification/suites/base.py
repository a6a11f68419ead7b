"""Base verification suite interface."""

from abc import ABC, abstractmethod

from src.verification.models import Case, RunConfig


class VerificationSuite(ABC):
    """A family of identity instances checked numerically.

    Subclasses enumerate their cases for a run configuration; the runner evaluates
    them and turns each outcome into one report record.

    Usage:
        suite = MehlerSuite()
        for case in suite.cases(config):
            comparison = case.evaluate()
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Suite identifier (e.g., 'mehler', 'gutzmer')."""
        ...

    @property
    def description(self) -> str:
        return ""

    @abstractmethod
    def cases(self, config: RunConfig) -> list[Case]:
        """Identity instances in report order."""
        ...
