"""Helpers for formatted terminal output."""

from .display import banner, divider, format_kv, print_app_banner, print_kv
from .status import fail, info, note, ok, warn
from .table import render_table, term_width

__all__ = [
    "banner",
    "divider",
    "format_kv",
    "print_app_banner",
    "print_kv",
    "render_table",
    "term_width",
    "info",
    "ok",
    "warn",
    "fail",
    "note",
]
