"""Graphviz DOT export: fill colour by community, width by degree."""

from __future__ import annotations

from typing import Any, Mapping

import networkx as nx

from analysis.community.partition import Partition
from core.errors import AnnotationMismatch
from network.types import LayerGraph, PersonId

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)
UNASSIGNED = "#d9d9d9"
BASE_WIDTH = 0.3
WIDTH_PER_DEGREE = 0.05
NODE_DEFAULTS = "node [shape=circle, style=filled, fixedsize=true];"


def _quote(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return f'"{escaped}"'


def _attr_list(data: Mapping[str, Any]) -> str:
    parts = []
    for key, value in data.items():
        text = f"{value:.3f}" if isinstance(value, float) else _quote(str(value))
        parts.append(f"{key}={text}")
    return ", ".join(parts)


def node_width(degree: int) -> float:
    return BASE_WIDTH + WIDTH_PER_DEGREE * degree


def styled_graph(
    g: LayerGraph,
    *,
    names: Mapping[PersonId, str] | None = None,
    partition: Partition | Mapping[PersonId, int] | None = None,
) -> nx.Graph:
    """Mutable copy of ``g`` carrying ``label``, ``fillcolor`` and ``width`` per node."""
    assignment = dict(partition.assignment if isinstance(partition, Partition) else (partition or {}))
    extra = sorted(set(assignment) - set(g.nodes))
    if extra:
        raise AnnotationMismatch(f"partition references unknown nodes: {', '.join(extra[:5])}")

    styled = nx.Graph(g.graph)
    labels = names or {}
    nx.set_node_attributes(styled, {node: labels.get(node, node) for node in g.nodes}, "label")
    nx.set_node_attributes(
        styled,
        {
            node: PALETTE[assignment[node] % len(PALETTE)] if node in assignment else UNASSIGNED
            for node in g.nodes
        },
        "fillcolor",
    )
    nx.set_node_attributes(styled, {node: node_width(d) for node, d in styled.degree}, "width")
    return styled


def to_dot(
    g: LayerGraph,
    *,
    names: Mapping[PersonId, str] | None = None,
    partition: Partition | Mapping[PersonId, int] | None = None,
) -> str:
    """One node statement per node and one ``--`` statement per edge."""
    styled = styled_graph(g, names=names, partition=partition)
    gid = g.kind.value if g.kind else "layer"
    lines = [f"graph {_quote(gid)} {{", f"  {NODE_DEFAULTS}"]
    for node, data in styled.nodes(data=True):
        lines.append(f"  {_quote(node)} [{_attr_list(data)}];")
    for u, v in styled.edges:
        lines.append(f"  {_quote(u)} -- {_quote(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
