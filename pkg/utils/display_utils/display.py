#!/usr/bin/env python3
# File: utils/display_utils/display.py
"""
General display utilities for Tejido.
- ASCII-only
- Banner and key/value blocks for run headers (stderr, so stdout stays data)
- Re-exports the status line helpers
"""

from __future__ import annotations

import sys
from typing import Any, Optional, Sequence, TextIO

from app_config import app_config
from . import table as tables
from .status import fail, info, note, ok, warn  # noqa: F401

term_width = tables.term_width


def divider(char: str = "-", width: Optional[int] = None, margin: int = 0) -> str:
    """
    Horizontal rule. `margin` adds leading/trailing spaces (clamped).
    """
    w = max(1, (width or term_width()) - margin * 2)
    line = (char or "-") * w
    return f'{" " * margin}{line}'


def banner(title: str, subtitle: Optional[str] = None, width: int = 60) -> str:
    top = divider("=", width)
    parts = [top, title.strip().center(width)]
    if subtitle:
        parts.append(subtitle.strip().center(width))
    parts.append(top)
    return "\n".join(parts)


def print_app_banner(subtitle: Optional[str] = None, *, stream: Optional[TextIO] = None) -> None:
    """Standard app banner using project metadata (stderr by default)."""
    title = f"{app_config.APP_NAME} v{app_config.APP_VERSION}"
    print(banner(title, subtitle=subtitle), file=stream or sys.stderr)


def format_kv(pairs: Sequence[tuple[str, Any]], key_pad: int = 14) -> str:
    """
    Aligned key/value lines.
    pairs: iterable of (key, value)
    """
    lines = []
    for k, v in pairs:
        key = str(k).rstrip(":")
        val = "" if v is None else str(v)
        lines.append(f"{key:<{key_pad}} : {val}")
    return "\n".join(lines)


def print_kv(pairs: Sequence[tuple[str, Any]], key_pad: int = 14, *, stream: Optional[TextIO] = None) -> None:
    print(format_kv(pairs, key_pad), file=stream or sys.stderr)
