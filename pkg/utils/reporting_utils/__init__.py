"""Plain-text report helpers."""

from .ieee import ieee_table, major_heading, subsection_heading

__all__ = ["ieee_table", "major_heading", "subsection_heading"]
