"""End-to-end pipeline: ingest, per-layer analyses, artifacts and report."""

from __future__ import annotations

import contextvars
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from analysis.centrality import Metric, ranked_table
from analysis.cliques import maximal_cliques, maximum_cliques
from analysis.community import compare_partitions, fiedler_bisection, girvan_newman
from analysis.degree_stats import (
    degree_distribution,
    degree_summary,
    fit_power_law_ls,
    fit_power_law_mle,
    fit_table,
    log_binned_distribution,
)
from app_config import app_config
from app_config.pipeline import PipelineConfig
from core.helpers import atomic_write_text
from export import (
    AnalysisBundle,
    LayerAnalysis,
    centrality_csv,
    fit_csv,
    force_layout,
    partition_csv,
    render_report,
    to_graphml,
)
from network import EdgeKind, MultiplexNetwork, connected_components
from utils.display_utils import display

from .utils import HANDLED_ERRORS, action_context, load_network, logger, report_failure, select_graph

REPORT_NAME = "report.txt"
SUMMARY_NAME = "summary.json"


@dataclass(slots=True)
class LayerRun:
    analysis: LayerAnalysis
    # file name -> document text
    artifacts: dict[str, str] = field(default_factory=dict)


def analyze_layer(net: MultiplexNetwork, kind: EdgeKind, config: PipelineConfig) -> LayerRun:
    """Run every enabled analysis on one layer and render its artifacts."""
    with action_context("analyze_layer", layer=kind.value, input_path=str(config.input)):
        g, full = select_graph(net, kind, config.giant_component)
        comps = connected_components(full)
        run = LayerRun(
            LayerAnalysis(kind=kind, node_count=full.number_of_nodes(), giant_size=len(comps[0]))
        )
        a = run.analysis
        prefix = kind.value
        logger.info("analysing layer", extra={"nodes": g.number_of_nodes(), "edges": g.number_of_edges()})

        if config.centrality.enabled:
            a.table = ranked_table(g, config.centrality.top, config.centrality.metrics)
            if set(a.table.scores) == set(Metric):
                run.artifacts[f"{prefix}_centrality.csv"] = centrality_csv(a.table.scores)

        opts = config.communities
        if opts.enabled:
            if opts.method in ("girvan-newman", "both"):
                a.gn = girvan_newman(g, opts.cuts, reference_count=full.number_of_nodes())
                run.artifacts[f"{prefix}_girvan_newman.csv"] = partition_csv(a.gn.first_cut)
            if opts.method in ("fiedler", "both"):
                a.fiedler = fiedler_bisection(g, strict=opts.strict)
                run.artifacts[f"{prefix}_fiedler.csv"] = partition_csv(a.fiedler.partition)
            if a.gn is not None and a.fiedler is not None:
                a.comparison = compare_partitions(a.gn.first_cut, a.fiedler.partition)

        if config.cliques.enabled:
            # cliques use the whole layer, not only the giant component
            if config.cliques.maximum_only:
                a.cliques = maximum_cliques(full, include_trivial=config.cliques.include_trivial)
            else:
                a.cliques = maximal_cliques(
                    full,
                    min_size=config.cliques.min_size,
                    include_trivial=config.cliques.include_trivial,
                )

        fit_opts = config.fit
        if fit_opts.enabled:
            dist = degree_distribution(g)
            a.degrees = degree_summary(g)
            source = log_binned_distribution(dist) if fit_opts.log_bins else dist
            fits = []
            if fit_opts.method in ("ls", "both"):
                fits.append(fit_power_law_ls(source, fit_opts.k_min))
            if fit_opts.method in ("mle", "both"):
                fits.append(fit_power_law_mle(dist.degrees, fit_opts.k_min, estimator=fit_opts.estimator))
            a.fits = tuple(fits)
            run.artifacts[f"{prefix}_fit.csv"] = fit_csv(fit_table(source, fits[0], log=fit_opts.log))

        layout = None
        if config.layout.enabled:
            layout = force_layout(g, config.layout.seed, config.layout.iterations)

        partition = a.gn.first_cut if a.gn is not None else (a.fiedler.partition if a.fiedler else None)
        run.artifacts[f"{prefix}.graphml"] = to_graphml(
            g,
            names={v: net.name(v) for v in g.nodes},
            partition=partition,
            scores=a.table.scores if a.table is not None else None,
            layout=layout,
        )
        return run


def _unique(layers: list[EdgeKind]) -> list[EdgeKind]:
    return list(dict.fromkeys(layers))


def run_pipeline(config: PipelineConfig) -> int:
    """Analyse every selected layer and write the artifact tree; returns exit status."""
    out_dir = Path(config.out_dir) if config.out_dir else app_config.output_dir()
    with action_context("pipeline", input_path=str(config.input)):
        try:
            net, summary = load_network(config.input, config.dangling)
            atomic_write_text(
                out_dir / SUMMARY_NAME, json.dumps(summary.to_dict(), indent=2, sort_keys=True) + "\n"
            )
        except HANDLED_ERRORS as exc:
            return report_failure("pipeline", exc)

        bundle = AnalysisBundle(names=dict(net.names))
        status = 0
        layers = _unique(config.layers)
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            futures = [
                (kind, pool.submit(contextvars.copy_context().run, analyze_layer, net, kind, config))
                for kind in layers
            ]
            for kind, future in futures:
                try:
                    run = future.result()
                except HANDLED_ERRORS as exc:
                    status = report_failure(f"{kind.value} layer", exc)
                    continue
                for name, text in run.artifacts.items():
                    atomic_write_text(out_dir / name, text)
                bundle.add(run.analysis)
                display.ok(f"{kind.label} layer: {len(run.artifacts)} artifacts")

        if status:
            return status
        try:
            atomic_write_text(out_dir / REPORT_NAME, render_report(bundle))
        except HANDLED_ERRORS as exc:
            return report_failure("report", exc)
        display.ok(f"Pipeline finished; artifacts in {out_dir}")
        return 0
