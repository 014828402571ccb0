"""Layout and serialization: GraphML, DOT, CSV tables and the text report."""

from .dot import styled_graph, to_dot
from .graphml import GraphMLDocument, read_graphml, to_graphml
from .layout import LayoutParams, LayoutResult, Lcg64, force_layout
from .report import AnalysisBundle, LayerAnalysis, render_report
from .tables import (
    centrality_csv,
    fit_csv,
    partition_csv,
    read_centrality_csv,
    read_fit_csv,
    read_partition_csv,
)

__all__ = [
    "AnalysisBundle",
    "GraphMLDocument",
    "LayerAnalysis",
    "LayoutParams",
    "LayoutResult",
    "Lcg64",
    "centrality_csv",
    "fit_csv",
    "force_layout",
    "partition_csv",
    "read_centrality_csv",
    "read_fit_csv",
    "read_graphml",
    "read_partition_csv",
    "render_report",
    "styled_graph",
    "to_dot",
    "to_graphml",
]
