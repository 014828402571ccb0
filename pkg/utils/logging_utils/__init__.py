"""Structured logging helpers."""

from .app_logger import app_logger
from .logging_config import StructuredLogger, configure_logging, get_logger

__all__ = [
    "StructuredLogger",
    "configure_logging",
    "get_logger",
    "app_logger",
]
