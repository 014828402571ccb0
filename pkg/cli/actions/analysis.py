"""Per-layer analysis subcommands: centrality, communities, cliques, fit."""

from __future__ import annotations

import argparse
from pathlib import Path

from analysis.centrality import Metric, compute, neighbor_degree_report, ranked_table
from analysis.cliques import maximal_cliques, maximum_cliques
from analysis.community import (
    compare_partitions,
    fiedler_bisection,
    girvan_newman,
    hub_community,
)
from analysis.degree_stats import (
    degree_distribution,
    degree_summary,
    fit_power_law_ls,
    fit_power_law_mle,
    fit_table,
    log_binned_distribution,
)
from app_config import ConfigError
from app_config.app_settings import get_settings
from core.helpers import fmt3
from export.report import (
    format_centrality_table,
    format_cliques,
    format_communities,
    format_degree_summary,
    format_fits,
)
from export.tables import centrality_csv, fit_csv, partition_csv, read_partition_csv
from utils.display_utils import display

from .utils import HANDLED_ERRORS, action_context, emit, load_network, report_failure, select_graph


def _giant(args: argparse.Namespace, default: bool) -> bool:
    return default if args.giant is None else args.giant


# -----------------------------
# centrality
# -----------------------------


def format_neighbor_report(report, names) -> str:
    hist = ", ".join(f"{k}:{c}" for k, c in report.histogram.items())
    top = names.get(report.top_neighbor, report.top_neighbor) if report.top_neighbor else "-"
    return (
        f"Neighbors of {names.get(report.node, report.node)}: {report.degree}\n"
        f"Neighbor degree histogram: {hist}\n"
        f"Highest-degree neighbor: {top} ({report.top_neighbor_degree})\n"
        f"Mean neighbor degree: {fmt3(report.mean_neighbor_degree)}"
    )


def run_centrality(args: argparse.Namespace) -> int:
    with action_context("centrality", layer=args.layer, input_path=args.input):
        try:
            net, _ = load_network(args.input, args.dangling)
            g, _ = select_graph(net, args.layer, _giant(args, True))
            metrics = list(Metric) if args.metric == "all" else [Metric(args.metric)]
            top = args.top or get_settings().top_k
            table = ranked_table(g, top, metrics)
            names = dict(net.names)
            emit(format_centrality_table(table, names))
            if args.neighbors:
                emit(format_neighbor_report(neighbor_degree_report(g, args.neighbors), names))
            if args.output:
                scores = table.scores if len(metrics) == len(Metric) else {m: compute(g, m) for m in Metric}
                emit(centrality_csv(scores), args.output)
        except HANDLED_ERRORS as exc:
            return report_failure("centrality", exc)
        return 0


# -----------------------------
# communities
# -----------------------------


def run_communities(args: argparse.Namespace) -> int:
    if getattr(args, "compare", None):
        return run_compare(args)
    with action_context("communities", layer=args.layer, input_path=args.input):
        try:
            if args.cuts < 1:
                raise ConfigError("--cuts must be at least 1")
            net, _ = load_network(args.input, args.dangling)
            g, full = select_graph(net, args.layer, _giant(args, True))
            gn = fiedler = comparison = None
            if args.method in ("girvan-newman", "both"):
                gn = girvan_newman(g, args.cuts, reference_count=full.number_of_nodes())
            if args.method in ("fiedler", "both"):
                fiedler = fiedler_bisection(g, strict=args.strict)
            if gn is not None and fiedler is not None:
                comparison = compare_partitions(gn.first_cut, fiedler.partition)

            partition = gn.first_cut if gn is not None else fiedler.partition
            hub, idx, size = hub_community(g, partition)
            lines = [format_communities(gn, fiedler, comparison)]
            if gn is not None and len(gn.entries) > 1:
                for i, entry in enumerate(gn.entries[1:], start=2):
                    sizes = " / ".join(fmt3(f) for f in sorted(entry.partition.fractions, reverse=True))
                    lines.append(f"  split {i}: {entry.partition.k} communities, fractions {sizes}")
            if gn is not None and g.number_of_nodes() < full.number_of_nodes():
                ref = " / ".join(fmt3(f) for f in sorted(gn.entries[0].reference_fractions, reverse=True))
                lines.append(f"  fractions of the full layer: {ref}")
            lines.append(f"Hub {net.name(hub)} is in community {idx} ({size} nodes)")
            emit("\n".join(lines))
            if args.output:
                emit(partition_csv(partition), args.output)
        except HANDLED_ERRORS as exc:
            return report_failure("communities", exc)
        return 0


def run_compare(args: argparse.Namespace) -> int:
    """Migrations between two partition CSV files."""
    first, second = args.compare
    with action_context("communities-compare", input_path=first):
        try:
            p = read_partition_csv(Path(first).read_text(encoding="utf-8"))
            q = read_partition_csv(Path(second).read_text(encoding="utf-8"))
            result = compare_partitions(p, q)
            matching = ", ".join(f"{a}->{b}" for a, b in sorted(result.matching.items()))
            lines = [
                f"Migrations between partitions: {result.migrations}",
                f"Block matching: {matching}",
            ]
            if result.migrated:
                lines.append(f"Migrated: {' '.join(result.migrated)}")
            emit("\n".join(lines))
        except HANDLED_ERRORS as exc:
            return report_failure("communities compare", exc)
        return 0


# -----------------------------
# cliques
# -----------------------------


def format_clique_lines(cliques) -> str:
    """One clique per line (sorted ids), tagged with its component index."""
    return "\n".join(
        f"{' '.join(c)}\tcomponent {comp}" for c, comp in zip(cliques.cliques, cliques.components)
    )


def run_cliques(args: argparse.Namespace) -> int:
    with action_context("cliques", layer=args.layer, input_path=args.input):
        try:
            net, _ = load_network(args.input, args.dangling)
            g, _ = select_graph(net, args.layer, _giant(args, False))
            if args.maximum_only:
                found = maximum_cliques(g, include_trivial=args.include_trivial)
            else:
                found = maximal_cliques(g, min_size=args.min_size, include_trivial=args.include_trivial)
            if not found.cliques:
                display.warn("no cliques at the requested size")
                return 0
            emit(format_clique_lines(found))
            emit(format_cliques(found, dict(net.names)))
        except HANDLED_ERRORS as exc:
            return report_failure("cliques", exc)
        return 0


# -----------------------------
# fit
# -----------------------------


def run_fit(args: argparse.Namespace) -> int:
    with action_context("fit", layer=args.layer, input_path=args.input):
        try:
            net, _ = load_network(args.input, args.dangling)
            g, _ = select_graph(net, args.layer, _giant(args, True))
            dist = degree_distribution(g)
            source = log_binned_distribution(dist) if args.log_bins else dist
            fits = []
            if args.method in ("ls", "both"):
                fits.append(fit_power_law_ls(source, args.kmin))
            if args.method in ("mle", "both"):
                fits.append(fit_power_law_mle(dist.degrees, args.kmin, estimator=args.estimator))
            emit(format_degree_summary(degree_summary(g), dict(net.names)))
            emit(format_fits(fits))
            if args.output:
                emit(fit_csv(fit_table(source, fits[0], log=args.log)), args.output)
        except HANDLED_ERRORS as exc:
            return report_failure("fit", exc)
        return 0
