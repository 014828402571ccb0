"""Profile ingestion: parsing, resolution and per-layer tallies."""

from .records import (
    ProfileRecord,
    load_records,
    parse_edge_csv,
    parse_profiles,
    serialize_edge_csv,
    serialize_profiles,
)
from .resolve import DanglingPolicy, resolve
from .summary import DanglingRef, IngestSummary, summarize

__all__ = [
    "DanglingPolicy",
    "DanglingRef",
    "IngestSummary",
    "ProfileRecord",
    "load_records",
    "parse_edge_csv",
    "parse_profiles",
    "resolve",
    "serialize_edge_csv",
    "serialize_profiles",
    "summarize",
]
