"""Run configuration and report records for the verification suites."""

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeFloat, PositiveFloat, PositiveInt, model_validator

from src.gutzmer.models import QuadratureOptions


class SuiteSelection(str, Enum):
    """Suites selectable from the command line."""

    GUTZMER = "gutzmer"
    MEHLER = "mehler"
    LEMMAS = "lemmas"
    ORTHO = "ortho"
    IMAGE = "image"
    KAVERAGE = "kaverage"
    ALL = "all"


class RunConfig(BaseModel):
    """Parameters of one verification run.

    Tolerances are grouped by strength: ``rtol`` for deterministic identities
    checked through quadrature, ``lemma_rtol`` for the norm and beta-sum lemmas and
    orthogonality leakage, ``strict_rtol`` for closed-form series and degenerate
    cases. Monte Carlo comparisons use ``mc_sigma`` standard errors.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    suite: SuiteSelection = SuiteSelection.ALL
    n: PositiveInt = Field(default=1, le=3)
    k_max: PositiveInt = 12
    mc_k_max: PositiveInt = 4
    gh_order: PositiveInt | None = None
    torus_points: PositiveInt | None = None
    mc_samples: PositiveInt = 20000
    seed: int | None = Field(default=None, ge=0)
    workers: PositiveInt = 1

    rtol: NonNegativeFloat = 1e-6
    lemma_rtol: NonNegativeFloat = 1e-8
    strict_rtol: NonNegativeFloat = 1e-10
    mc_sigma: NonNegativeFloat = 3.0
    mc_floor_rtol: NonNegativeFloat = 1e-2
    decay_rtol: NonNegativeFloat = 0.05
    growth_slope: NonNegativeFloat = 1e-3

    grid_points: PositiveInt = 20
    grid_radius: PositiveFloat = 1.5

    out: Path | None = None

    @model_validator(mode="after")
    def require_seed_for_monte_carlo(self) -> "RunConfig":
        if self.seed is None and self.uses_monte_carlo:
            raise ValueError(f"seed is required for suite '{self.suite.value}' (Monte Carlo)")
        return self

    @property
    def uses_monte_carlo(self) -> bool:
        if self.suite in (SuiteSelection.KAVERAGE, SuiteSelection.ALL):
            return True
        return self.suite == SuiteSelection.GUTZMER and self.n >= 2

    def quadrature_options(self, **overrides: Any) -> QuadratureOptions:
        """Quadrature options carrying this run's orders, budget and tolerances."""
        values = {
            "gh_order": self.gh_order,
            "torus_points": self.torus_points,
            "mc_samples": self.mc_samples,
            "seed": self.seed,
            "workers": self.workers,
            "rtol": self.rtol,
            "mc_sigma": self.mc_sigma,
            "mc_floor_rtol": self.mc_floor_rtol,
        }
        values.update(overrides)
        return QuadratureOptions(**values)


class Measure(str, Enum):
    """How ``error`` relates ``lhs`` to ``rhs``."""

    RELATIVE = "relative"
    ABSOLUTE = "absolute"
    SCALED = "scaled"
    STDERR = "stderr"


@dataclass
class Comparison:
    """Outcome of one identity instance before it becomes a record."""

    lhs: complex
    rhs: complex
    error: float
    tolerance: float
    measure: Measure = Measure.RELATIVE
    metadata: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def relative(
        cls, lhs: complex, rhs: complex, tolerance: float, scale: float | None = None, **metadata: Any
    ) -> "Comparison":
        """|lhs - rhs| / scale, with scale defaulting to |rhs|."""
        scale = abs(rhs) if scale is None else scale
        diff = abs(complex(lhs) - complex(rhs))
        error = diff / scale if scale > 0 else diff
        return cls(complex(lhs), complex(rhs), float(error), tolerance, Measure.RELATIVE, metadata)

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.error) and self.error <= self.tolerance)


@dataclass(frozen=True)
class Case:
    """One identity instance: its inputs and a deferred evaluation."""

    name: str
    inputs: dict[str, Any]
    evaluate: Callable[[], Comparison]


def _pair(value: complex) -> list[float]:
    value = complex(value)
    return [value.real, value.imag]


class VerificationRecord(BaseModel):
    """One line of the report."""

    kind: Literal["record"] = "record"
    suite: str
    case: str
    inputs: dict[str, Any]
    lhs: list[float] | None = None
    rhs: list[float] | None = None
    error: float | None = None
    tolerance: float | None = None
    measure: Measure | None = None
    passed: bool
    metadata: dict[str, Any] = {}
    message: str | None = None

    @classmethod
    def from_comparison(cls, suite: str, case: Case, comparison: Comparison) -> "VerificationRecord":
        return cls(
            suite=suite,
            case=case.name,
            inputs=case.inputs,
            lhs=_pair(comparison.lhs),
            rhs=_pair(comparison.rhs),
            error=comparison.error,
            tolerance=comparison.tolerance,
            measure=comparison.measure,
            passed=comparison.passed,
            metadata=comparison.metadata,
        )

    @classmethod
    def from_error(cls, suite: str, case: Case, exc: Exception) -> "VerificationRecord":
        return cls(
            suite=suite,
            case=case.name,
            inputs=case.inputs,
            passed=False,
            message=f"{type(exc).__name__}: {exc}",
        )


class ReportHeader(BaseModel):
    kind: Literal["header"] = "header"
    started_at: str
    config: dict[str, Any]


class RunSummary(BaseModel):
    """Final report line and the CLI's exit decision."""

    kind: Literal["summary"] = "summary"
    suites: list[str]
    total: int
    passed: int
    failed: int
    failing: list[str] = []

    @property
    def ok(self) -> bool:
        return self.failed == 0
