#!/usr/bin/env python3
# File: core/helpers.py
"""
General-purpose helper functions for Tejido.
Not specific to display, menus, or config.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path


def fmt3(x: float) -> str:
    """Fixed three-decimal rendering used by every human-readable table."""
    out = f"{x:.3f}"
    return "0.000" if out == "-0.000" else out


def fmt_full(x: float) -> str:
    """Shortest text that reads back to the same float."""
    return repr(float(x))


def atomic_write_text(path: str | Path, text: str, encoding: str = "utf-8") -> Path:
    """
    Write text through a temporary file in the same directory and rename it
    into place, so readers never see a partial file.
    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{target.name}.", dir=target.parent)
    try:
        with os.fdopen(fd, "w", encoding=encoding, newline="") as f:
            f.write(text)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    return target
