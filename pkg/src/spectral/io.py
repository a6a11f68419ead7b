"""Plain-text coefficient tables for Hermite expansions.

Format, version 1::

    # hermite-expansion v1
    n <n>
    k_max <K>
    <alpha_1> ... <alpha_n> <re> <im>

One row per stored coefficient, sorted by (level, alpha). Floats are written
with ``repr`` so a save/load round trip is exact.
"""

import cmath
import logging
from pathlib import Path

from src.exceptions import ExpansionFormatError, HermiteGutzmerError
from src.phase_space.models import MultiIndex
from src.spectral.expansion import HermiteExpansion

logger = logging.getLogger(__name__)

FORMAT_HEADER = "# hermite-expansion v1"


def dumps_expansion(F: HermiteExpansion) -> str:
    lines = [FORMAT_HEADER, f"n {F.n}", f"k_max {F.k_max}"]
    for alpha, c in F.coeffs.items():
        indices = " ".join(str(a) for a in alpha)
        lines.append(f"{indices} {float(c.real)!r} {float(c.imag)!r}")
    return "\n".join(lines) + "\n"


def save_expansion(F: HermiteExpansion, path: Path) -> None:
    """Write ``F`` to ``path`` in the v1 text format."""
    path = Path(path)
    path.write_text(dumps_expansion(F), encoding="utf-8")
    logger.info(f"Saved expansion with {len(F.coeffs)} coefficients to {path}")


def _header_value(lines: list[str], row: int, key: str) -> int:
    if len(lines) < row:
        raise ExpansionFormatError(row, f"file ends before the '{key}' line")
    parts = lines[row - 1].split()
    if len(parts) != 2 or parts[0] != key:
        raise ExpansionFormatError(row, f"expected '{key} <integer>', got {lines[row - 1]!r}")
    try:
        return int(parts[1])
    except ValueError:
        raise ExpansionFormatError(row, f"'{key}' must be an integer, got {parts[1]!r}")


def loads_expansion(text: str) -> HermiteExpansion:
    """Parse the v1 text format.

    Raises:
        ExpansionFormatError: On a version mismatch or a malformed row; ``row`` is the
            1-based line number.
    """
    lines = text.splitlines()
    if not lines:
        raise ExpansionFormatError(1, "empty file")
    if lines[0].strip() != FORMAT_HEADER:
        raise ExpansionFormatError(1, f"expected header {FORMAT_HEADER!r}, got {lines[0].strip()!r}")
    n = _header_value(lines, 2, "n")
    k_max = _header_value(lines, 3, "k_max")
    if n < 1 or k_max < 0:
        raise ExpansionFormatError(2 if n < 1 else 3, f"invalid dimensions n={n}, k_max={k_max}")

    coeffs: dict[MultiIndex, complex] = {}
    for row, line in enumerate(lines[3:], start=4):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != n + 2:
            raise ExpansionFormatError(row, f"expected {n} indices and 2 floats, got {len(parts)} fields")
        try:
            alpha = MultiIndex(tuple(int(p) for p in parts[:n]))
            c = complex(float(parts[n]), float(parts[n + 1]))
        except (ValueError, HermiteGutzmerError) as exc:
            raise ExpansionFormatError(row, str(exc))
        if not cmath.isfinite(c):
            raise ExpansionFormatError(row, f"coefficient must be finite, got {parts[n]} {parts[n + 1]}")
        if alpha.level > k_max:
            raise ExpansionFormatError(row, f"multi-index {alpha} exceeds k_max = {k_max}")
        if alpha in coeffs:
            raise ExpansionFormatError(row, f"duplicate multi-index {alpha}")
        coeffs[alpha] = c
    try:
        return HermiteExpansion(n, k_max, coeffs)
    except HermiteGutzmerError as exc:
        raise ExpansionFormatError(len(lines), str(exc))


def load_expansion(path: Path) -> HermiteExpansion:
    """Read an expansion saved by ``save_expansion``."""
    F = loads_expansion(Path(path).read_text(encoding="utf-8"))
    logger.info(f"Loaded expansion n={F.n}, k_max={F.k_max} from {path}")
    return F
