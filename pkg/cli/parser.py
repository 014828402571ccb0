"""Argument parser for the ``tejido`` command line."""

from __future__ import annotations

import argparse

from analysis.centrality import Metric
from app_config import app_config
from ingest import DanglingPolicy
from network import EdgeKind

KINDS = [k.value for k in EdgeKind]


def _input(p: argparse.ArgumentParser) -> None:
    """Input file and dangling-reference policy; every reading subcommand takes these."""
    p.add_argument("--input", "-i", help="profile records (.jsonl) or edge list (.csv)")
    p.add_argument(
        "--dangling",
        choices=[d.value for d in DanglingPolicy],
        default=None,
        help="handling of relations to missing profiles (default: materialize-stub)",
    )


def _scope(p: argparse.ArgumentParser, *, multi_layer: bool = False) -> None:
    """Layer selection and giant-component switch for the analysis subcommands."""
    if multi_layer:
        p.add_argument("--layer", action="append", choices=KINDS, help="layer to analyse (repeatable)")
    else:
        p.add_argument("--layer", choices=KINDS, default="alliance", help="layer to analyse")
    scope = p.add_mutually_exclusive_group()
    scope.add_argument(
        "--giant-component", dest="giant", action="store_true", default=None,
        help="analyse the largest connected component",
    )
    scope.add_argument(
        "--full-layer", dest="giant", action="store_false", help="analyse the whole layer",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tejido",
        description=f"{app_config.APP_NAME}: multiplex political network analysis",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {app_config.APP_VERSION}")
    sub = parser.add_subparsers(dest="cmd", metavar="command")

    p = sub.add_parser("ingest", help="validate and resolve input records")
    _input(p)
    p.add_argument("-o", "--output", help="write normalized records (JSON lines)")

    p = sub.add_parser("summary", help="per-kind edge counts and giant components")
    _input(p)
    p.add_argument("--out-dir", help="also write summary.json here")

    p = sub.add_parser("centrality", help="top-k nodes by centrality")
    _input(p)
    _scope(p)
    p.add_argument("--metric", choices=[m.value for m in Metric] + ["all"], default="all")
    p.add_argument("--top", type=int, help="rows per metric (default TEJIDO_TOP_K)")
    p.add_argument("--neighbors", metavar="ID", help="neighbor degree report for a node")
    p.add_argument("-o", "--output", help="write node,degree,betweenness,closeness,eigenvector CSV")

    p = sub.add_parser("communities", help="Girvan-Newman and Fiedler partitions")
    _input(p)
    _scope(p)
    p.add_argument("--method", choices=["girvan-newman", "fiedler", "both"], default="girvan-newman")
    p.add_argument("--cuts", type=int, default=1, help="split events to record")
    p.add_argument("--strict", action="store_true", help="fail on a repeated Fiedler value")
    p.add_argument("-o", "--output", help="write node,community CSV")
    modes = p.add_subparsers(dest="mode", metavar="mode")
    cmp_parser = modes.add_parser("compare", help="count migrations between two partition CSVs")
    cmp_parser.add_argument("compare", nargs=2, metavar="CSV")

    p = sub.add_parser("cliques", help="maximal and maximum cliques")
    _input(p)
    _scope(p)
    p.add_argument("--maximum-only", action="store_true")
    p.add_argument("--min-size", type=int, default=2)
    p.add_argument("--include-trivial", action="store_true", help="report isolated nodes as 1-cliques")

    p = sub.add_parser("fit", help="power-law exponent of the degree distribution")
    _input(p)
    _scope(p)
    p.add_argument("--method", choices=["ls", "mle", "both"], default="ls")
    p.add_argument("--kmin", type=int, default=1)
    p.add_argument("--estimator", choices=["exact", "approximate"], default="exact")
    p.add_argument("--log-bins", action="store_true", help="fit logarithmically binned frequencies")
    p.add_argument("--log", action="store_true", help="emit the table in log10 coordinates")
    p.add_argument("-o", "--output", help="write k,p_k,fitted CSV")

    p = sub.add_parser("layout", help="force-directed layout as GraphML or DOT")
    _input(p)
    _scope(p)
    p.add_argument("--seed", type=int, help="layout seed (default TEJIDO_DEFAULT_SEED)")
    p.add_argument("--iters", type=int, default=500)
    p.add_argument("--format", choices=["graphml", "dot"], default="graphml")
    p.add_argument("--communities", action="store_true", help="colour by the first Girvan-Newman cut")
    p.add_argument("-o", "--output")

    p = sub.add_parser("report", help="plain-text report of the selected layers")
    _input(p)
    _scope(p, multi_layer=True)
    p.add_argument("--config", help="YAML or JSON pipeline configuration")
    p.add_argument("--all", action="store_true", help="include communities, cliques and fits")
    p.add_argument("--top", type=int)
    p.add_argument("--cuts", type=int)
    p.add_argument("-o", "--output")

    p = sub.add_parser("pipeline", help="run every analysis and write all artifacts")
    _input(p)
    _scope(p, multi_layer=True)
    p.add_argument("--config", help="YAML or JSON pipeline configuration")
    p.add_argument("--out-dir", help="artifact directory (default TEJIDO_OUTPUT_DIR)")
    p.add_argument("--seed", type=int, help="layout seed, required unless --no-layout")
    p.add_argument("--workers", type=int)
    p.add_argument("--top", type=int)
    p.add_argument("--cuts", type=int)
    p.add_argument("--community-method", choices=["girvan-newman", "fiedler", "both"])
    p.add_argument("--strict", action="store_true")
    p.add_argument("--min-size", type=int)
    p.add_argument("--maximum-only", action="store_true")
    p.add_argument("--include-trivial", action="store_true")
    p.add_argument("--fit-method", choices=["ls", "mle", "both"])
    p.add_argument("--kmin", type=int)
    p.add_argument("--log-bins", action="store_true")
    p.add_argument("--log", action="store_true")
    p.add_argument("--iters", type=int)
    for section in ("centrality", "communities", "cliques", "fit", "layout"):
        p.add_argument(f"--no-{section}", action="store_true", help=f"skip {section}")

    return parser
