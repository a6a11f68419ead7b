"""Library configuration using pydantic-settings."""

from enum import Enum
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Environment(str, Enum):
    """Execution environment."""

    DEVELOPMENT = "development"
    CI = "ci"
    PRODUCTION = "production"


class Settings(BaseSettings):
    """Capability limits and numerical defaults loaded from environment variables.

    Seeds are deliberately absent: every randomized run takes its seed from the
    run configuration.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="HG_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_env: Environment = Environment.DEVELOPMENT
    log_level: str = "INFO"

    # Capability limits
    k_cap: int = Field(default=512, ge=1, le=2048)
    y_cap: float = Field(default=12.0, gt=0.0, le=20.0)
    mehler_eps: float = Field(default=1e-6, gt=0.0, lt=1.0)

    # Quadrature
    gh_order: int = Field(default=160, ge=1, le=512)
    gh_order_max: int = Field(default=512, ge=1, le=512)
    torus_points: int = Field(default=64, ge=1, le=4096)
    quadrature_rtol: float = Field(default=1e-9, gt=0.0)

    # Monte Carlo over U(n)
    mc_samples: int = Field(default=20000, ge=1)
    mc_chunk_size: int = Field(default=2048, ge=1, le=65536)

    @field_validator("log_level", mode="after")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        """Accept lower-case level names from the environment."""
        return v.upper()

    @property
    def is_ci(self) -> bool:
        """Check if running under continuous integration."""
        return self.app_env == Environment.CI


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


# Convenience access
settings = get_settings()
