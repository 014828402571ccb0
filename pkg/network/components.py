"""Connected components and giant-component extraction."""

from __future__ import annotations

import networkx as nx

from core.errors import EmptyGraph

from .types import LayerGraph, PersonId


def connected_components(g: LayerGraph) -> list[frozenset[PersonId]]:
    """Components sorted by size descending, ties by smallest contained id."""
    comps = [frozenset(c) for c in nx.connected_components(g.graph)]
    comps.sort(key=lambda c: (-len(c), min(c)))
    return comps


def is_connected(g: LayerGraph) -> bool:
    return g.number_of_nodes() > 0 and nx.is_connected(g.graph)


def giant_component(g: LayerGraph) -> LayerGraph:
    """Induced subgraph on the largest component."""
    if g.number_of_nodes() == 0:
        raise EmptyGraph("Graph has no nodes")
    largest = connected_components(g)[0]
    if len(largest) == g.number_of_nodes():
        return g
    return g.subgraph(largest)


def component_index(g: LayerGraph) -> dict[PersonId, int]:
    """Map each node to the position of its component in :func:`connected_components`."""
    return {
        node: i for i, comp in enumerate(connected_components(g)) for node in comp
    }
