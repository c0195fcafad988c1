"""
Configuration management for the star representation toolkit.
Single source of truth for tunables; every value can be overridden with a
STAR_* environment variable or a .env file.
"""
from typing import Optional, Tuple

from pydantic import Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from app.core.exceptions import ConfigurationError

LOG_LEVELS = {"error": "ERROR", "warning": "WARNING", "info": "INFO", "debug": "DEBUG"}


class Settings(BaseSettings):
    """Application settings with environment variable support."""

    # Application
    app_name: str = "Star RGB Toolkit"
    app_version: str = "1.0.0"

    # Logging (STAR_LOG)
    log: str = "info"
    log_format: str = "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"
    log_file: Optional[str] = None

    # Pixel metrics
    cosine_epsilon: float = 1e-12

    # Star encoder
    # Three segments of at least two frames each
    min_star_rgb_frames: int = Field(6, ge=6)

    # Corpus transforms, (width, height)
    default_resize: Tuple[int, int] = (160, 120)
    default_crop: Tuple[int, int] = (140, 110)

    # Attention fusion
    standardize_epsilon: float = 1e-5
    scorer_hidden_units: int = 128
    params_format_version: int = 1

    # CLI defaults
    default_jobs: int = 1
    default_seed: int = 0

    model_config = SettingsConfigDict(
        env_prefix="STAR_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("log")
    @classmethod
    def _check_log_level(cls, value: str) -> str:
        value = value.strip().lower()
        if value not in LOG_LEVELS:
            raise ValueError(f"STAR_LOG must be one of {sorted(LOG_LEVELS)}, got '{value}'")
        return value

    @property
    def log_level(self) -> str:
        """Loguru level name for the configured verbosity."""
        return LOG_LEVELS[self.log]


def load_settings() -> Settings:
    """Build settings from the environment, surfacing bad values as ConfigurationError."""
    try:
        return Settings()
    except ValidationError as e:
        raise ConfigurationError(
            "Invalid configuration",
            {"errors": [err["msg"] for err in e.errors()]}
        )


# Singleton instance
settings = load_settings()
