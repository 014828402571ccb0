"""``layout``, ``report`` and ``pipeline`` subcommands."""

from __future__ import annotations

import argparse
from typing import Any

from analysis.community import girvan_newman
from app_config import app_config
from app_config.app_settings import get_settings
from app_config.pipeline import build_config
from export import AnalysisBundle, force_layout, render_report, to_dot, to_graphml
from utils.display_utils import display

from .pipeline import analyze_layer, run_pipeline
from .utils import HANDLED_ERRORS, action_context, emit, load_network, report_failure, select_graph


def run_layout(args: argparse.Namespace) -> int:
    """Force layout of one layer, written as GraphML (default) or DOT."""
    with action_context("layout", layer=args.layer, input_path=args.input):
        try:
            net, _ = load_network(args.input, args.dangling)
            g, _ = select_graph(net, args.layer, True if args.giant is None else args.giant)
            seed = args.seed if args.seed is not None else get_settings().default_seed
            result = force_layout(g, seed, args.iters)
            names = {v: net.name(v) for v in g.nodes}
            partition = None
            if args.communities and g.number_of_edges():
                partition = girvan_newman(g).first_cut
            if args.format == "dot":
                doc = to_dot(g, names=names, partition=partition)
            else:
                doc = to_graphml(g, names=names, partition=partition, layout=result)
            emit(doc, args.output)
        except HANDLED_ERRORS as exc:
            return report_failure("layout", exc)
        return 0


def _section_flags(args: argparse.Namespace, *, everything: bool) -> dict[str, Any]:
    return {
        "centrality": {"enabled": True, "top": getattr(args, "top", None) or get_settings().top_k},
        "communities": {"enabled": everything, "cuts": getattr(args, "cuts", None)},
        "cliques": {"enabled": everything},
        "fit": {"enabled": everything},
    }


def pipeline_overrides(args: argparse.Namespace) -> dict[str, Any]:
    """Flags as a nested mapping; ``None`` means "not given" and is skipped."""
    return {
        "input": args.input,
        "layers": args.layer,
        "out_dir": args.out_dir,
        "dangling": args.dangling,
        "giant_component": args.giant,
        "workers": args.workers,
        "centrality": {"enabled": _off(args.no_centrality), "top": args.top},
        "communities": {
            "enabled": _off(args.no_communities),
            "cuts": args.cuts,
            "method": args.community_method,
            "strict": args.strict or None,
        },
        "cliques": {
            "enabled": _off(args.no_cliques),
            "min_size": args.min_size,
            "maximum_only": args.maximum_only or None,
            "include_trivial": args.include_trivial or None,
        },
        "fit": {
            "enabled": _off(args.no_fit),
            "method": args.fit_method,
            "k_min": args.kmin,
            "log_bins": args.log_bins or None,
            "log": args.log or None,
        },
        "layout": {"enabled": _off(args.no_layout), "seed": args.seed, "iterations": args.iters},
    }


def _off(flag: bool) -> bool | None:
    return False if flag else None


def run_report(args: argparse.Namespace) -> int:
    """Analyse the selected layers in memory and render the text report."""
    with action_context("report", input_path=args.input):
        try:
            overrides = {
                "input": args.input,
                "layers": args.layer,
                "dangling": args.dangling,
                "giant_component": args.giant,
                "layout": {"enabled": False},
                **_section_flags(args, everything=args.all),
            }
            config = build_config(overrides, args.config)
            net, _ = load_network(config.input, config.dangling)
            bundle = AnalysisBundle(names=dict(net.names))
            for kind in dict.fromkeys(config.layers):
                bundle.add(analyze_layer(net, kind, config).analysis)
            emit(render_report(bundle), args.output)
        except HANDLED_ERRORS as exc:
            return report_failure("report", exc)
        return 0


def run_pipeline_command(args: argparse.Namespace) -> int:
    with action_context("pipeline", input_path=args.input):
        try:
            config = build_config(pipeline_overrides(args), args.config)
        except HANDLED_ERRORS as exc:
            return report_failure("pipeline", exc)
        display.print_app_banner("pipeline")
        display.print_kv(
            [
                ("Input", config.input),
                ("Layers", ", ".join(k.value for k in config.layers)),
                ("Output", config.out_dir or app_config.output_dir()),
                ("Workers", config.workers),
                ("Layout seed", config.layout.seed if config.layout.enabled else "off"),
            ]
        )
        return run_pipeline(config)
