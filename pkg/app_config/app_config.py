#!/usr/bin/env python3
# File: app_config/app_config.py
"""Central configuration for Tejido.

- Resolves project root robustly (even if imported from elsewhere).
- Defines the standard output directory.
- Exposes application metadata used by banners and reports.
"""

from __future__ import annotations

import os
from pathlib import Path

from app_config.app_settings import get_settings

# -----------------------------
# App metadata
# -----------------------------

APP_NAME: str = "Tejido"
APP_VERSION: str = "0.3.0"

# Optional terminal colour output
USE_COLOR: bool = os.getenv("TEJIDO_COLOR", "0") not in ("0", "false", "False", "")


# -----------------------------
# Project root discovery
# -----------------------------

def _discover_project_root() -> Path:
    """
    Walk up from this file until the CLI entry point is found.
    Fallback: parent of the ``app_config`` directory.
    """
    here = Path(__file__).resolve()
    start = here.parent
    for p in [start] + list(start.parents):
        if (p / "cli" / "__main__.py").exists():
            return p
    return here.parents[1]


PROJECT_ROOT: Path = _discover_project_root()


# -----------------------------
# Standard directories
# -----------------------------


def output_dir() -> Path:
    """Default artifact directory (``TEJIDO_OUTPUT_DIR`` overrides)."""
    configured = get_settings().output_dir
    return Path(configured) if configured else PROJECT_ROOT / "output"

