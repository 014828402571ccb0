#!/usr/bin/env python3
"""Minimal IEEE-style reporting helpers.

Tables are rendered without a width limit so the same bundle always produces
the same bytes regardless of terminal size.
"""

from __future__ import annotations

from typing import Any, Iterable, Sequence

from utils.display_utils.table import render_table


def ieee_table(headers: Sequence[str], rows: Iterable[Sequence[Any]], *, caption: str | None = None) -> str:
    """Render an ASCII table and return it as a string."""
    body = render_table(rows, headers=headers)
    return f"{caption}\n{body}" if caption else body


def major_heading(text: str) -> str:
    """Upper-cased heading with a ``=`` rule."""
    line = text.strip().upper()
    return f"{line}\n{'=' * len(line)}"


def subsection_heading(text: str) -> str:
    line = text.strip()
    return f"{line}\n{'-' * len(line)}"
