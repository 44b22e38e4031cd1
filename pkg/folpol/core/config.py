# folpol/core/config.py
"""
Configuration - Engine settings from environment variables and .env
"""

from typing import Literal, Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine settings, overridable with FOLPOL_* environment variables"""

    model_config = SettingsConfigDict(
        env_prefix="FOLPOL_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    APP_NAME: str = "folpol"
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: Literal["console", "json"] = "console"

    # Truncation policy
    TRUNC_START: Optional[int] = Field(default=None, ge=4)
    TRUNC_CEILING: int = Field(default=1024, ge=8)
    TRUNC_SLACK: int = Field(default=2, ge=0)

    # Reduction
    MAX_BLOWUPS: int = Field(default=64, ge=1)

    # Genericity sampling
    SEED: int = 0
    GENERIC_SAMPLES: int = Field(default=3, ge=2)
    GENERIC_RESAMPLES: int = Field(default=3, ge=0)
    LINE_RETRIES: int = Field(default=5, ge=1)

    # Per-point fan-out of projective analyses
    WORKERS: int = Field(default=1, ge=1)

    # HTTP surface
    HOST: str = "127.0.0.1"
    PORT: int = 8000


settings = Settings()
