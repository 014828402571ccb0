"""Shared utility subpackages."""

from . import display_utils, logging_utils, reporting_utils

__all__ = [
    "display_utils",
    "logging_utils",
    "reporting_utils",
]
