"""Configuration management for zomatch using Pydantic Settings."""

import logging
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class MatcherSettings(BaseSettings):
    """Primal-dual matcher configuration."""

    model_config = SettingsConfigDict(
        env_prefix="ZOM_MATCHER_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    check_invariants: bool = False
    cycle_check_max_vertices: int = 60
    max_phases: int | None = None

    def phase_limit(self, vertex_count: int) -> int:
        """Upper bound on phases before a run is declared stuck."""
        if self.max_phases is not None:
            return self.max_phases
        # y_max grows by at least 1 per phase and never exceeds 2n
        return 2 * vertex_count + 2


class SeparatorSettings(BaseSettings):
    """Recursive separator weight assignment constants."""

    model_config = SettingsConfigDict(
        env_prefix="ZOM_SEPARATOR_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    vertex_factor: float = 2.0
    edge_factor: float = 4.0
    balance_alpha: float = 3.0


class GeoSettings(BaseSettings):
    """Approximate bottleneck matching configuration."""

    model_config = SettingsConfigDict(
        env_prefix="ZOM_GEO_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    epsilon: float = 0.25
    early_stop: bool = False
    oracle_max_points: int = 256
    # verify checks geometric invariants on the winning guess for this many phases
    verify_phases: int = Field(default=3, ge=0)

    @field_validator("epsilon")
    @classmethod
    def validate_epsilon(cls, v: float) -> float:
        if not 0 < v <= 1:
            raise ValueError("epsilon must lie in (0, 1]")
        return v


class BenchSettings(BaseSettings):
    """Phase-count benchmark sweep configuration."""

    model_config = SettingsConfigDict(
        env_prefix="ZOM_BENCH_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    sizes: list[int] = Field(default_factory=lambda: [64, 128, 256])
    trials: int = 5
    workers: int = 4
    weight_one_probability: float = 1.0
    edge_factor: int = 4


class Settings(BaseSettings):
    """Main application settings."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        populate_by_name=True,
    )

    seed: int = Field(default=20240229, alias="ZOM_SEED")

    # Logging
    log_level: str = Field(default="WARNING", alias="ZOM_LOG_LEVEL")

    # Raise on ledger or invariant failure instead of only recording it
    strict_invariants: bool = Field(default=True, alias="ZOM_STRICT")

    # Oracles
    brute_force_limit: int = Field(default=200, alias="ZOM_BRUTE_FORCE_LIMIT")

    # Nested settings
    matcher: MatcherSettings = Field(default_factory=MatcherSettings)
    separator: SeparatorSettings = Field(default_factory=SeparatorSettings)
    geo: GeoSettings = Field(default_factory=GeoSettings)
    bench: BenchSettings = Field(default_factory=BenchSettings)

    @field_validator("log_level", mode="before")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = str(v).upper()
        # logging.getLevelNamesMapping() is 3.11+; it returns a copy of _nameToLevel.
        names = getattr(logging, "getLevelNamesMapping", lambda: logging._nameToLevel)()
        if level not in names:
            raise ValueError(f"Unknown log level: {v}")
        return level


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
