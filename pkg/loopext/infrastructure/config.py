"""Configuration management for loopext.

This module provides environment-aware configuration using pydantic-settings.
Domain code never reads it directly; the command-line layer passes the
configured values down as explicit arguments.
"""

import logging
from functools import lru_cache
from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from loopext.infrastructure.logging import parse_log_level

PROJECT_DIR = Path(__file__).parent.parent
BASE_DIR = PROJECT_DIR.parent


class Config(BaseSettings):
    """Toolkit configuration."""

    model_config = SettingsConfigDict(
        env_file=BASE_DIR / ".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        validate_default=True,
    )

    seed: int = Field(
        default=0,
        ge=0,
        description="Default seed for every randomized command",
    )

    samples: int = Field(
        default=500,
        ge=1,
        le=1_000_000,
        description="Sample points drawn by the smooth-loop suites",
    )

    trials: int = Field(
        default=100,
        ge=1,
        le=100_000,
        description="Random cocycles drawn per audit",
    )

    derivative_tolerance: float = Field(
        default=1e-5,
        gt=0,
        description="Dual-number versus finite-difference Jacobian tolerance",
    )

    algebraic_tolerance: float = Field(
        default=1e-8,
        gt=0,
        description="Residual tolerance for numerically checked identities",
    )

    finite_difference_step: float = Field(
        default=1e-4,
        gt=0,
        le=1e-1,
        description="Step of the central finite-difference oracle",
    )

    condition_number_limit: float = Field(
        default=1e12,
        gt=1,
        description="Jacobians above this condition number are refused",
    )

    closure_cap: int = Field(
        default=1_000_000,
        ge=1,
        description="Largest permutation group a closure may produce",
    )

    extension_cap: int = Field(
        default=10_000,
        ge=1,
        description="Largest materialized extension order",
    )

    enumeration_max_order: int = Field(
        default=8,
        ge=1,
        le=8,
        description="Largest order accepted by the loop search",
    )

    resample_retries: int = Field(
        default=10,
        ge=0,
        le=1000,
        description="Redraws of a sample point that falls outside the domain",
    )

    phi_exhaustive_limit: int = Field(
        default=128,
        ge=0,
        description=(
            "Inner mapping groups up to this order get a pairwise homomorphism check"
        ),
    )

    fixtures_dir: Path = Field(
        default=BASE_DIR / "fixtures",
        description="Directory holding the frozen Cayley table fixtures",
    )

    log_force_json: bool = Field(
        default=False,
        description="Force JSON logging",
    )

    log_level: int = Field(
        default=logging.WARNING,
        ge=logging.NOTSET,
        le=logging.CRITICAL,
        description="Log level (accepts string names like 'INFO' or integer values)",
    )

    @field_validator("log_level", mode="before")
    @classmethod
    def validate_log_level(cls, v: str | int) -> int:
        """Convert string log level names to corresponding integer values."""
        return parse_log_level(v)


@lru_cache(maxsize=1)
def get_config() -> Config:
    """Get cached toolkit configuration.

    This function uses LRU cache to ensure configuration is loaded only once
    and reused across the process.

    Returns:
        Configured Config instance.

    Examples:
        >>> config = get_config()
        >>> config.samples
        500

        # Subsequent calls return the same cached instance
        >>> config2 = get_config()
        >>> assert config is config2
    """
    return Config()
