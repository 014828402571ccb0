"""``ingest`` and ``summary`` subcommands."""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from core.helpers import atomic_write_text
from ingest import ProfileRecord, serialize_profiles
from network import EdgeKind, MultiplexNetwork
from utils.display_utils import display
from utils.reporting_utils import ieee_table

from .utils import HANDLED_ERRORS, action_context, emit, load_network, logger, report_failure


def network_records(net: MultiplexNetwork) -> list[ProfileRecord]:
    """One record per node; each edge is listed once, on its smaller endpoint."""
    relations: dict[str, list[tuple[str, EdgeKind]]] = {v: [] for v in net.nodes}
    for kind in EdgeKind:
        for u, v in net.edges(kind):
            relations[u].append((v, kind))
    return [
        ProfileRecord(id=v, name=net.name(v), relations=tuple(sorted(relations[v])))
        for v in net.nodes
    ]


def run_ingest(args: argparse.Namespace) -> int:
    """Validate and resolve the input; optionally write the normalized records."""
    with action_context("ingest", input_path=str(args.input)):
        try:
            net, summary = load_network(args.input, args.dangling)
        except HANDLED_ERRORS as exc:
            return report_failure("ingest", exc)
        logger.info("ingest complete", extra={"dangling": len(summary.dangling_references)})
        display.info(
            f"{summary.node_count} nodes, {summary.total_edges} edges, "
            f"{len(summary.dangling_references)} dangling references"
        )
        if args.output:
            emit(serialize_profiles(network_records(net)), args.output)
        return 0


def format_summary(summary) -> str:
    table = ieee_table(["Kind", "Edges", "Giant component"], summary.rows())
    return f"Nodes: {summary.node_count}\n{table}\nTotal edges: {summary.total_edges}"


def run_summary(args: argparse.Namespace) -> int:
    """Per-kind edge counts and giant components; also written as ``summary.json``."""
    with action_context("summary", input_path=str(args.input)):
        try:
            _, summary = load_network(args.input, args.dangling)
            emit(format_summary(summary))
            if args.out_dir:
                path = atomic_write_text(
                    Path(args.out_dir) / "summary.json",
                    json.dumps(summary.to_dict(), indent=2, sort_keys=True) + "\n",
                )
                display.ok(f"Wrote {path}")
        except HANDLED_ERRORS as exc:
            return report_failure("summary", exc)
        return 0
