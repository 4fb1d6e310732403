"""Application configuration using Pydantic Settings."""

from functools import lru_cache
from pathlib import Path
from typing import Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

_LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


class Settings(BaseSettings):
    """Library and CLI settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="PLEXLAYOUT_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application Settings
    APP_NAME: str = Field(default="plexlayout", description="Application name")
    APP_VERSION: str = Field(default="0.1.0", description="Application version")
    LOG_LEVEL: str = Field(default="WARNING", description="Logging level")
    OUTPUT_DIR: str = Field(default=".", description="Default directory for file outputs")

    # Pipeline defaults
    DEFAULT_DEGREE: int = Field(default=1, ge=1, le=3, description="Lagrange degree")
    DEFAULT_PARTS: int = Field(default=1, ge=1, description="Number of simulated ranks")
    DEFAULT_OVERLAP: int = Field(default=1, ge=0, le=1, description="Overlap depth in cells")
    SHUFFLE_SEED: int = Field(
        default=0x5EED_CAFE_F00D_1234,
        ge=0,
        lt=2**64,
        description="Seed of the shuffled cell ordering baseline",
    )

    # Benchmark and portrait settings
    BENCH_REPEATS: int = Field(default=100, ge=1, description="Repetitions per benchmark loop")
    BENCH_CELL_WEIGHT: float = Field(default=1.0, description="Constant cell weight of the kernels")
    PORTRAIT_MAX_PIXELS: int = Field(
        default=10000, ge=1, description="Portrait side length before max-pool downsampling"
    )

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalise_log_level(cls, v: Any) -> str:
        """Upper-case the log level and reject unknown names."""
        level = str(v).strip().upper()
        if level not in _LOG_LEVELS:
            raise ValueError(f"LOG_LEVEL must be one of {', '.join(_LOG_LEVELS)}")
        return level

    @property
    def output_path(self) -> Path:
        """Default output directory as a path."""
        return Path(self.OUTPUT_DIR)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


# Global settings instance
settings = get_settings()
