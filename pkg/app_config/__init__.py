"""Configuration package: settings, file loading and pipeline options."""

from .load_configs import ConfigError, load, merge_overrides

__all__ = ["ConfigError", "load", "merge_overrides"]
