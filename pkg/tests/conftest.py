"""Pytest configuration and fixtures."""

import os
from pathlib import Path

import numpy as np
import pytest

# Set test environment
os.environ["HG_APP_ENV"] = "ci"
os.environ["HG_LOG_LEVEL"] = "WARNING"

from src.gutzmer.models import QuadratureOptions  # noqa: E402
from src.phase_space.models import MultiIndex, PhasePoint  # noqa: E402
from src.quadrature.rules import gauss_hermite_rule  # noqa: E402
from src.spectral.expansion import HermiteExpansion  # noqa: E402

DATA_DIR = Path(__file__).resolve().parents[1] / "data"
FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture
def rng():
    """Seeded generator for randomized inputs."""
    return np.random.default_rng(20240611)


@pytest.fixture
def rule_40():
    """Gauss-Hermite rule of order 40."""
    return gauss_hermite_rule(40)


@pytest.fixture
def h0():
    return HermiteExpansion.basis((0,))


@pytest.fixture
def h0_plus_half_h3():
    """h_0 + h_3 / 2, the shipped fixture expansion."""
    return HermiteExpansion.from_coefficients(1, {(0,): 1.0, (3,): 0.5})


@pytest.fixture
def random_expansion_1d(rng):
    """Random complex expansion in one dimension with K_max = 12 and decaying coefficients."""
    k_max = 12
    ks = np.arange(k_max + 1)
    values = (rng.standard_normal(k_max + 1) + 1j * rng.standard_normal(k_max + 1)) * np.exp(-0.3 * ks)
    return HermiteExpansion.from_coefficients(1, {(k,): values[k] for k in ks}, k_max)


@pytest.fixture
def random_expansion_2d(rng):
    """Random complex expansion in two dimensions with K_max = 3."""
    coeffs = {
        alpha: complex(rng.standard_normal(), rng.standard_normal()) * np.exp(-0.3 * alpha.level)
        for alpha in MultiIndex.up_to_level(2, 3)
    }
    return HermiteExpansion(2, 3, coeffs)


@pytest.fixture
def imaginary_point():
    """z = i/2, w = 0 in one dimension."""
    return PhasePoint.from_parts([0.0], [0.5], [0.0], [0.0])


@pytest.fixture
def generic_point():
    """A one-dimensional phase point with every part nonzero."""
    return PhasePoint.from_parts([0.4], [-0.6], [0.9], [0.3])


@pytest.fixture
def mc_options():
    """Monte Carlo options with a fixed seed and a modest sample budget."""
    return QuadratureOptions(mc_samples=4000, seed=7)


@pytest.fixture
def report_path(tmp_path):
    """Temporary JSON-lines report path."""
    return tmp_path / "report.jsonl"
