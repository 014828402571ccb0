"""Subcommand implementations split across modules."""

from .analysis import run_centrality, run_cliques, run_communities, run_compare, run_fit
from .export import run_layout, run_pipeline_command, run_report
from .ingest import run_ingest, run_summary
from .pipeline import analyze_layer, run_pipeline

__all__ = [
    "analyze_layer",
    "run_centrality",
    "run_cliques",
    "run_communities",
    "run_compare",
    "run_fit",
    "run_ingest",
    "run_layout",
    "run_pipeline",
    "run_pipeline_command",
    "run_report",
    "run_summary",
]
