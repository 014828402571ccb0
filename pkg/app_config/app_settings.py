"""Core application settings loaded from environment variables.

This module uses :class:`pydantic_settings.BaseSettings` to provide a
single source of truth for environment overrides. Modules call
:func:`get_settings` instead of reading ``os.environ`` directly.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]


class AppSettings(BaseSettings):
    """Runtime configuration for the Tejido toolkit."""

    output_dir: str | None = None
    log_level: LogLevel = "INFO"
    log_to_stderr: bool = True
    default_seed: int = Field(7, ge=0)
    top_k: int = Field(2, ge=1)

    model_config = SettingsConfigDict(env_prefix="TEJIDO_", case_sensitive=False)


@lru_cache
def get_settings() -> AppSettings:
    """Return cached application settings using environment variables."""
    return AppSettings()
