"""Image of the Hermite semigroup: weighted norms, Laguerre-heat integrals, heat-kernel mass."""

import math

from src.exceptions import DomainError
from src.gutzmer.heat import (
    heat_kernel_integral,
    heat_kernel_total,
    image_norm,
    laguerre_heat_closed,
    laguerre_heat_integral,
)
from src.spectral.expansion import HermiteExpansion
from src.spectral.operations import semigroup
from src.verification.models import Case, Comparison, Measure, RunConfig
from src.verification.suites.base import VerificationSuite
from src.verification.suites.registry import SuiteRegistry

IMAGE_TIMES = (0.1, 0.25, 0.5)
LAGUERRE_TIMES = (0.05, 0.1)
LAGUERRE_LEVEL_MAX = 6
HEAT_TIMES = (0.25, 0.5, 1.0)
DIVERGENT_LEVEL = 60
DIVERGENT_TIME = 0.25


def image_samples() -> dict[str, HermiteExpansion]:
    return {
        "h0": HermiteExpansion.basis((0,)),
        "h1": HermiteExpansion.basis((1,)),
        "h0+h3/2": HermiteExpansion.from_coefficients(1, {(0,): 1.0, (3,): 0.5}),
    }


@SuiteRegistry.register
class ImageSuite(VerificationSuite):
    @property
    def name(self) -> str:
        return "image"

    @property
    def description(self) -> str:
        return "U_t-weighted norm of e^(-tH) f, Laguerre-heat integrals, heat-kernel mass"

    def cases(self, config: RunConfig) -> list[Case]:
        return (
            self._image_cases(config)
            + [self._divergence_case(config)]
            + self._laguerre_cases(config)
            + self._heat_cases(config)
        )

    def _image_cases(self, config: RunConfig) -> list[Case]:
        options = config.quadrature_options(gh_order=None, torus_points=None)
        constant = math.sqrt(2.0 * math.pi)
        cases = []
        for label, f in image_samples().items():
            for t in IMAGE_TIMES:

                def evaluate(f=f, t=t) -> Comparison:
                    ratio = image_norm(semigroup(f, t), t, options) / f.norm_squared()
                    return Comparison.relative(ratio, constant, config.rtol)

                cases.append(
                    Case(name=f"image norm f={label} t={t}", inputs={"f": label, "t": t}, evaluate=evaluate)
                )
        return cases

    def _divergence_case(self, config: RunConfig) -> Case:
        """An unsmoothed expansion with weight at a high level must be rejected."""
        options = config.quadrature_options(gh_order=None, torus_points=None)
        F = HermiteExpansion.from_coefficients(1, {(0,): 1.0, (DIVERGENT_LEVEL,): 1.0})

        def evaluate() -> Comparison:
            try:
                image_norm(F, DIVERGENT_TIME, options)
            except DomainError as e:
                return Comparison(1.0, 1.0, 0.0, 0.0, Measure.ABSOLUTE, {"raised": str(e)})
            return Comparison(0.0, 1.0, 1.0, 0.0, Measure.ABSOLUTE, {"raised": None})

        return Case(
            name=f"divergence h0+h{DIVERGENT_LEVEL} unsmoothed t={DIVERGENT_TIME}",
            inputs={"f": f"h0+h{DIVERGENT_LEVEL}", "t": DIVERGENT_TIME},
            evaluate=evaluate,
        )

    def _laguerre_cases(self, config: RunConfig) -> list[Case]:
        options = config.quadrature_options(gh_order=None, torus_points=None)
        cases = []
        for n in (1, 2):
            for t in LAGUERRE_TIMES:

                def calibration(n=n, t=t) -> Comparison:
                    result = laguerre_heat_integral(0, n, t, options)
                    return Comparison.relative(result.value, laguerre_heat_closed(0, n, t), config.rtol)

                cases.append(
                    Case(name=f"Laguerre-heat k=0 n={n} t={t}", inputs={"k": 0, "n": n, "t": t}, evaluate=calibration)
                )
        for t in LAGUERRE_TIMES:
            for k in range(LAGUERRE_LEVEL_MAX):

                def ratio(t=t, k=k) -> Comparison:
                    lower = laguerre_heat_integral(k, 1, t, options).value
                    upper = laguerre_heat_integral(k + 1, 1, t, options).value
                    return Comparison.relative(upper / lower, math.exp(4.0 * t), config.rtol)

                cases.append(
                    Case(
                        name=f"Laguerre-heat ratio k={k}->{k + 1} t={t}",
                        inputs={"k": k, "n": 1, "t": t},
                        evaluate=ratio,
                    )
                )
        return cases

    def _heat_cases(self, config: RunConfig) -> list[Case]:
        cases = []
        for n in (1, 2):
            for t in HEAT_TIMES:

                def evaluate(n=n, t=t) -> Comparison:
                    return Comparison.relative(heat_kernel_integral(t, n), heat_kernel_total(t, n), config.strict_rtol)

                cases.append(Case(name=f"heat kernel mass n={n} t={t}", inputs={"n": n, "t": t}, evaluate=evaluate))
        return cases
