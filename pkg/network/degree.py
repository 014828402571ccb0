"""Degree queries on a layer graph."""

from __future__ import annotations

from collections import Counter

from .types import LayerGraph, PersonId


def degree(g: LayerGraph, v: PersonId) -> int:
    g.require(v)
    return g.graph.degree(v)


def degree_sequence(g: LayerGraph) -> dict[PersonId, int]:
    """Degree of every node, keyed in node order."""
    return {node: g.graph.degree(node) for node in g.nodes}


def neighbor_degree_histogram(g: LayerGraph, v: PersonId) -> dict[int, int]:
    """Count ``v``'s neighbors by their degree; counts sum to ``degree(v)``."""
    g.require(v)
    counts = Counter(g.graph.degree(u) for u in g.graph.neighbors(v))
    return dict(sorted(counts.items()))
