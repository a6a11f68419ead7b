"""Key-value run configuration files.

    # comment
    suite = gutzmer
    n = 2
    seed = 7
"""

import logging
from pathlib import Path

from src.exceptions import ConfigFileError
from src.verification.models import RunConfig

logger = logging.getLogger(__name__)


def parse_config_text(text: str) -> dict[str, str]:
    """Parse ``key = value`` lines; blank lines and ``#`` comments are skipped.

    Raises:
        ConfigFileError: For lines without ``=``, empty keys or values, unknown or
            repeated keys.
    """
    known = set(RunConfig.model_fields)
    values: dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigFileError(number, f"expected 'key = value', got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if not key or not value:
            raise ConfigFileError(number, "empty key or value")
        if key not in known:
            raise ConfigFileError(number, f"unknown key '{key}'")
        if key in values:
            raise ConfigFileError(number, f"key '{key}' given twice")
        values[key] = value
    return values


def load_config_file(path: Path) -> dict[str, str]:
    """Read a configuration file; values stay strings until RunConfig validates them."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigFileError(0, f"cannot read {path}: {e}")
    values = parse_config_text(text)
    logger.debug(f"Loaded {len(values)} settings from {path}")
    return values
