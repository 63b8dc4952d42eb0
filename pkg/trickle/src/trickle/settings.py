import os
from functools import lru_cache
from typing import Any

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Trickle settings."""

    # Tolerances
    tol_exact: float = Field(default=1e-12, gt=0)
    tol_eig: float = Field(default=1e-9, gt=0)

    # Enumeration caps
    cap_enum: int = Field(default=10**7, gt=0)
    cap_facets: int = Field(default=10**4, gt=0)
    cap_exact_starts: int = Field(default=10**4, gt=0)
    sampled_starts: int = Field(default=64, gt=0)
    exact_rational_max_free: int = 6
    memo_max_entries: int = Field(default=2**18, gt=0)

    # Randomness and parallelism
    seed: int = 0
    workers: int = Field(default_factory=lambda: os.cpu_count() or 1, gt=0)

    # Certificate options
    strengthened_bound: bool = True

    model_config = SettingsConfigDict(env_prefix="TRICKLE_", env_file=".env", extra="ignore")


_overrides: dict[str, Any] = {}


@lru_cache
def get_settings() -> Settings:
    """Get settings cached."""
    return Settings(**_overrides)


def override_settings(**values: Any) -> Settings:  # noqa: ANN401
    """Replace the cached settings; values take precedence over the environment.

    Passing nothing restores the environment defaults.
    """
    _overrides.clear()
    _overrides.update(values)
    get_settings.cache_clear()
    return get_settings()
