"""Quadrature over R^n, the n-torus and U(n)."""

from src.quadrature.integrals import (
    gaussian_envelope_integral,
    torus_integral,
    torus_line_integral,
)
from src.quadrature.monte_carlo import MonteCarloEstimate, haar_chunks, haar_integral_mc
from src.quadrature.rules import GaussHermiteRule, TorusRule, gauss_hermite_rule, torus_rule

__all__ = [
    "GaussHermiteRule",
    "MonteCarloEstimate",
    "TorusRule",
    "gauss_hermite_rule",
    "gaussian_envelope_integral",
    "haar_chunks",
    "haar_integral_mc",
    "torus_integral",
    "torus_line_integral",
    "torus_rule",
]
