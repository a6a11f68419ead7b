"""Gutzmer's formula and its relatives over a grid of phase points."""

import math

import numpy as np

from src.gutzmer.formula import (
    converse_decay_check,
    gutzmer_check,
    gutzmer_lhs,
    gutzmer_rhs,
    polarized_gutzmer,
    torus_average_identity,
)
from src.gutzmer.models import GutzmerReport
from src.phase_space.models import PhasePoint
from src.spectral.expansion import HermiteExpansion
from src.verification.models import Case, Comparison, Measure, RunConfig
from src.verification.suites.base import VerificationSuite
from src.verification.suites.registry import SuiteRegistry
from src.verification.suites.samples import describe_point, phase_grid, sample_expansion

SAMPLE_COUNT = 3
TORUS_POINT_COUNT = 2
POLARIZED_LEVEL_MAX = 4
POLARIZED_POINT = PhasePoint.from_parts([0.3], [0.5], [-0.2], [0.4])
REAL_POINT = PhasePoint.real([0.7], [-0.4])
CONVERSE_RATES = (0.3, 0.7)
CONVERSE_LEVELS = 48


def _report_metadata(report: GutzmerReport) -> dict:
    return report.model_dump(
        include={"gh_order", "torus_points", "mc_samples", "seed", "lhs_stderr", "rhs_tail", "flagged"}
    )


@SuiteRegistry.register
class GutzmerSuite(VerificationSuite):
    @property
    def name(self) -> str:
        return "gutzmer"

    @property
    def description(self) -> str:
        return "Gutzmer's formula, its polarization, torus identity, real-point reduction and converse"

    def cases(self, config: RunConfig) -> list[Case]:
        cases = self._formula_cases(config) + self._real_point_cases(config)
        cases += self._polarized_cases(config) + self._torus_cases(config)
        if config.n >= 2:
            cases += self._monte_carlo_cases(config)
        return cases + self._converse_cases(config)

    def _formula_cases(self, config: RunConfig) -> list[Case]:
        options = config.quadrature_options()
        samples = [sample_expansion(1, config.k_max, index) for index in range(SAMPLE_COUNT)]
        cases = []
        for index, F in enumerate(samples):
            for p in phase_grid(config.grid_points, 1, config.grid_radius):

                def evaluate(F=F, p=p) -> Comparison:
                    report = gutzmer_check(F, p, options)
                    return Comparison.relative(report.lhs, report.rhs, config.rtol, **_report_metadata(report))

                cases.append(
                    Case(
                        name=f"n=1 sample={index} {p!r}",
                        inputs={"n": 1, "sample": index, "k_max": config.k_max, **describe_point(p)},
                        evaluate=evaluate,
                    )
                )
        return cases

    def _real_point_cases(self, config: RunConfig) -> list[Case]:
        options = config.quadrature_options()
        cases = []
        for index in range(SAMPLE_COUNT):
            F = sample_expansion(1, config.k_max, index)

            def lhs_side(F=F) -> Comparison:
                value = gutzmer_lhs(F, REAL_POINT, options).value
                return Comparison.relative(value, F.norm_squared(), config.strict_rtol)

            def rhs_side(F=F) -> Comparison:
                return Comparison.relative(gutzmer_rhs(F, REAL_POINT)[0], F.norm_squared(), config.strict_rtol)

            inputs = {"n": 1, "sample": index, "k_max": config.k_max, **describe_point(REAL_POINT)}
            cases.append(Case(name=f"real point lhs sample={index}", inputs=inputs, evaluate=lhs_side))
            cases.append(Case(name=f"real point rhs sample={index}", inputs=inputs, evaluate=rhs_side))
        return cases

    def _polarized_cases(self, config: RunConfig) -> list[Case]:
        """Phi_alpha against Phi_beta: the cross term vanishes unless alpha = beta."""
        options = config.quadrature_options()
        p = POLARIZED_POINT
        diagonal = {a: gutzmer_rhs(HermiteExpansion.basis((a,)), p)[0] for a in range(POLARIZED_LEVEL_MAX + 1)}
        cases = []
        for a in range(POLARIZED_LEVEL_MAX + 1):
            for b in range(POLARIZED_LEVEL_MAX + 1):

                def evaluate(a=a, b=b) -> Comparison:
                    F = HermiteExpansion.basis((a,), POLARIZED_LEVEL_MAX)
                    G = HermiteExpansion.basis((b,), POLARIZED_LEVEL_MAX)
                    result = polarized_gutzmer(F, G, p, options)
                    scale = math.sqrt(diagonal[a] * diagonal[b])
                    comparison = Comparison.relative(result.lhs, result.rhs, config.rtol, scale=scale)
                    comparison.measure = Measure.SCALED
                    return comparison

                cases.append(
                    Case(
                        name=f"polarized alpha={a} beta={b}",
                        inputs={"alpha": [a], "beta": [b], **describe_point(p)},
                        evaluate=evaluate,
                    )
                )
        return cases

    def _torus_cases(self, config: RunConfig) -> list[Case]:
        options = config.quadrature_options()
        F = sample_expansion(2, config.mc_k_max, 0)
        cases = []
        for p in phase_grid(TORUS_POINT_COUNT, 2, config.grid_radius):

            def evaluate(p=p) -> Comparison:
                lhs, rhs = torus_average_identity(F, p, options)
                return Comparison.relative(lhs, rhs, config.rtol)

            cases.append(
                Case(
                    name=f"torus identity n=2 {p!r}",
                    inputs={"n": 2, "sample": 0, "k_max": config.mc_k_max, **describe_point(p)},
                    evaluate=evaluate,
                )
            )
        return cases

    def _monte_carlo_cases(self, config: RunConfig) -> list[Case]:
        options = config.quadrature_options()
        n = config.n
        F = sample_expansion(n, config.mc_k_max, 0)
        cases = []
        for p in phase_grid(config.grid_points, n, config.grid_radius):

            def evaluate(p=p) -> Comparison:
                report = gutzmer_check(F, p, options)
                return Comparison(
                    lhs=report.lhs,
                    rhs=report.rhs,
                    error=report.abs_error,
                    tolerance=report.tolerance,
                    measure=Measure.STDERR,
                    metadata=_report_metadata(report),
                )

            cases.append(
                Case(
                    name=f"n={n} Monte Carlo {p!r}",
                    inputs={"n": n, "sample": 0, "k_max": config.mc_k_max, "seed": config.seed, **describe_point(p)},
                    evaluate=evaluate,
                )
            )
        return cases

    def _converse_cases(self, config: RunConfig) -> list[Case]:
        """Level norms e^{-2 sqrt(k) t0}: finite Gutzmer sum inside radius t0, t0 recovered by the fit."""
        cases = []
        for t0 in CONVERSE_RATES:

            def evaluate(t0=t0) -> Comparison:
                ks = np.arange(CONVERSE_LEVELS + 1)
                F = HermiteExpansion.from_levels(1, np.exp(-2.0 * np.sqrt(ks) * t0))
                p = PhasePoint.from_parts([0.0], [0.5 * t0], [0.0], [0.0])
                report = converse_decay_check(F, p)
                comparison = Comparison.relative(
                    report.t_hat,
                    t0,
                    config.decay_rtol,
                    r=report.r,
                    gutzmer_sum=report.rhs,
                    bounded=report.bounded,
                )
                if not (report.bounded and math.isfinite(report.rhs)):
                    comparison.error = math.inf
                return comparison

            cases.append(
                Case(
                    name=f"converse t0={t0}",
                    inputs={"n": 1, "t0": t0, "k_max": CONVERSE_LEVELS, "y": 0.5 * t0},
                    evaluate=evaluate,
                )
            )
        return cases
