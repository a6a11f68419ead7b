"""Monte Carlo integration over U(n) with the normalized Haar measure."""

import logging
import math
from collections.abc import Callable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from src.config import get_settings
from src.exceptions import InputError
from src.phase_space.actions import haar_unitaries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Sample mean of a Haar integrand with its standard error."""

    estimate: complex | float
    stderr: float
    samples: int
    seed: int

    def agrees_with(self, target: complex | float, sigma: float, floor: float = 0.0) -> bool:
        """|estimate - target| <= max(floor, sigma * stderr)."""
        return abs(self.estimate - target) <= max(floor, sigma * self.stderr)


def chunk_sizes(samples: int, chunk_size: int) -> list[int]:
    full, rest = divmod(samples, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def haar_chunks(n: int, samples: int, seed: int, chunk_size: int | None = None) -> Iterator[NDArray]:
    """Haar unitaries in fixed-size chunks, chunk c drawn from SeedSequence(seed, spawn_key=(c,))."""
    chunk_size = chunk_size or get_settings().mc_chunk_size
    for index, size in enumerate(chunk_sizes(samples, chunk_size)):
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))
        yield haar_unitaries(n, size, rng)


def haar_integral_mc(
    g: Callable[[NDArray], NDArray],
    n: int,
    samples: int | None = None,
    seed: int | None = None,
    *,
    chunk_size: int | None = None,
    workers: int = 1,
) -> MonteCarloEstimate:
    """Estimate int_{U(n)} g(sigma) d sigma.

    ``g`` maps a stack of unitaries ``(S, n, n)`` to ``S`` values. Chunks are seeded by
    their index and reduced in index order, so the estimate does not depend on
    ``workers``.

    Raises:
        InputError: If ``n < 2`` (the circle is integrated deterministically) or no seed is given.
    """
    if n < 2:
        raise InputError("Haar Monte Carlo needs n >= 2; integrate U(1) with torus_integral")
    if seed is None:
        raise InputError("Haar Monte Carlo needs an explicit seed")
    settings = get_settings()
    samples = samples or settings.mc_samples
    chunk_size = chunk_size or settings.mc_chunk_size

    def evaluate(chunk: NDArray) -> NDArray:
        return np.asarray(g(chunk)).reshape(-1)

    chunks = haar_chunks(n, samples, seed, chunk_size)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(evaluate, chunks))
    else:
        parts = [evaluate(chunk) for chunk in chunks]
    values = np.concatenate(parts)

    estimate = values.mean()
    stderr = float(np.std(values, ddof=1) / math.sqrt(samples)) if samples > 1 else 0.0
    if np.iscomplexobj(values):
        estimate = complex(estimate)
    else:
        estimate = float(estimate)
    logger.debug(f"Haar MC over U({n}): {samples} samples, seed {seed}, estimate {estimate} +- {stderr:.2e}")
    return MonteCarloEstimate(estimate=estimate, stderr=stderr, samples=samples, seed=seed)
