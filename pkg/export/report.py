"""Plain-text analysis report.

The ``format_*`` helpers are shared with the CLI subcommands so a report
section and the matching command print the same text.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from analysis.centrality import Metric, RankedTable
from analysis.cliques import CliqueSet, clique_overlap, mutual_intersection, overlap_matrix
from analysis.community.girvan_newman import GNDendrogram
from analysis.community.partition import Partition, PartitionComparison
from analysis.community.spectral import SpectralBisection
from analysis.degree_stats import DegreeSummary, PowerLawFit
from core.errors import EmptyBundle
from core.helpers import fmt3
from network.types import EdgeKind, PersonId
from utils.reporting_utils import ieee_table, major_heading, subsection_heading

REPORT_TITLE = "Tejido network report"


@dataclass(slots=True)
class LayerAnalysis:
    """Everything computed for one layer; unset sections are skipped."""

    kind: EdgeKind
    node_count: int
    giant_size: int
    table: RankedTable | None = None
    gn: GNDendrogram | None = None
    fiedler: SpectralBisection | None = None
    comparison: PartitionComparison | None = None
    cliques: CliqueSet | None = None
    fits: tuple[PowerLawFit, ...] = ()
    degrees: DegreeSummary | None = None

    def has_results(self) -> bool:
        sections = (self.table, self.gn, self.fiedler, self.comparison, self.cliques, self.degrees)
        return bool(self.fits) or any(s is not None for s in sections)


@dataclass(slots=True)
class AnalysisBundle:
    layers: dict[EdgeKind, LayerAnalysis] = field(default_factory=dict)
    names: Mapping[PersonId, str] = field(default_factory=dict)

    def add(self, analysis: LayerAnalysis) -> None:
        self.layers[analysis.kind] = analysis


def _label(node: PersonId, names: Mapping[PersonId, str]) -> str:
    return names.get(node, node)


def format_giant_line(a: LayerAnalysis) -> str:
    share = a.giant_size / a.node_count if a.node_count else 0.0
    return f"Giant component: {a.giant_size} of {a.node_count} nodes ({fmt3(share)})"


def format_centrality_table(table: RankedTable, names: Mapping[PersonId, str] | None = None) -> str:
    """Top-k per metric side by side, one ``name (value)`` cell per metric."""
    names = names or {}
    headers = ["#", *(m.heading for m in table.metrics)]
    columns = [table.top(m) for m in table.metrics]
    rows = []
    for i in range(table.k):
        row: list[str] = [str(i + 1)]
        for metric, col in zip(table.metrics, columns):
            if i >= len(col):
                row.append("")
                continue
            node, value = col[i]
            shown = str(int(value)) if metric is Metric.DEGREE else fmt3(value)
            row.append(f"{_label(node, names)} ({shown})")
        rows.append(row)
    return ieee_table(headers, rows)


def format_fractions(label: str, partition: Partition) -> str:
    parts = " / ".join(fmt3(f) for f in sorted(partition.fractions, reverse=True))
    return f"{label}: {partition.k} communities, fractions {parts}"


def format_communities(
    gn: GNDendrogram | None,
    fiedler: SpectralBisection | None,
    comparison: PartitionComparison | None,
) -> str:
    lines: list[str] = []
    if gn is not None:
        first = gn.entries[0]
        lines.append(format_fractions("Girvan-Newman", first.partition))
        lines.append(
            f"  first split after {first.edges_removed} removals, modularity {fmt3(first.modularity)}"
        )
    if fiedler is not None:
        lines.append(format_fractions("Fiedler", fiedler.partition))
        note = ", degenerate" if fiedler.degenerate else ""
        lines.append(
            f"  lambda_2 {fmt3(fiedler.fiedler_value)}, modularity {fmt3(fiedler.modularity)}{note}"
        )
    if comparison is not None:
        lines.append(f"Migrations between partitions: {comparison.migrations}")
    return "\n".join(lines)


def format_cliques(cliques: CliqueSet, names: Mapping[PersonId, str] | None = None) -> str:
    """Maximum-clique inventory with pairwise and mutual overlap."""
    names = names or {}
    top = [c for c in cliques.cliques if len(c) == cliques.size_of_maximum]
    lines = [f"Maximum clique size: {cliques.size_of_maximum} ({len(top)} cliques)"]
    rows = [
        [str(i + 1), ", ".join(_label(v, names) for v in clique)] for i, clique in enumerate(top)
    ]
    lines.append(ieee_table(["#", "Members"], rows))
    if len(top) > 1:
        matrix = overlap_matrix(top)
        headers = ["", *(str(i + 1) for i in range(len(top)))]
        lines.append("Overlap (shared members)")
        lines.append(ieee_table(headers, [[str(i + 1), *r] for i, r in enumerate(matrix)]))
        if len(top) == 2:
            shared, frac = clique_overlap(top[0], top[1])
            lines.append(f"Shared by both: {shared} ({fmt3(frac)})")
        common = mutual_intersection(top)
        lines.append(f"Common to all: {len(common)}")
    return "\n".join(lines)


def format_fits(fits: tuple[PowerLawFit, ...] | list[PowerLawFit]) -> str:
    rows = [[f.label, fmt3(f.gamma), str(f.k_min), fmt3(f.goodness), str(f.support)] for f in fits]
    return ieee_table(["Method", "gamma", "k_min", "Goodness", "Support"], rows)


def format_degree_summary(s: DegreeSummary, names: Mapping[PersonId, str] | None = None) -> str:
    names = names or {}
    return (
        f"Mean degree {fmt3(s.mean_degree)}, max {s.max_degree} "
        f"({_label(s.hub, names)}, {fmt3(s.hub_ratio)}x mean)"
    )


def render_layer(a: LayerAnalysis, names: Mapping[PersonId, str] | None = None) -> str:
    parts = [subsection_heading(f"{a.kind.label} layer"), format_giant_line(a)]
    if a.degrees is not None:
        parts.append(format_degree_summary(a.degrees, names))
    if a.table is not None:
        parts.append(format_centrality_table(a.table, names))
    if a.gn is not None or a.fiedler is not None or a.comparison is not None:
        parts.append(format_communities(a.gn, a.fiedler, a.comparison))
    if a.cliques is not None:
        parts.append(format_cliques(a.cliques, names))
    if a.fits:
        parts.append(format_fits(a.fits))
    return "\n\n".join(parts)


def render_report(bundle: AnalysisBundle) -> str:
    """Per-layer sections in layer order; raises :class:`EmptyBundle` when empty."""
    ready = [bundle.layers[k] for k in EdgeKind if k in bundle.layers and bundle.layers[k].has_results()]
    if not ready:
        raise EmptyBundle("report needs at least one analysis result")
    sections = [major_heading(REPORT_TITLE)]
    sections.extend(render_layer(a, bundle.names) for a in ready)
    return "\n\n".join(sections) + "\n"
