"""Girvan-Newman divisive partitioning by repeated edge-betweenness removal."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from core.errors import ExhaustedEdges
from network.types import Edge, LayerGraph, canonical_edge
from utils.logging_utils.app_logger import app_logger

from .partition import Partition, modularity

logger = app_logger.get_logger(__name__)

# relative slack when comparing floating edge-betweenness values for ties
TIE_TOLERANCE = 1e-9


def edge_betweenness(g: LayerGraph) -> dict[Edge, float]:
    """Unnormalized edge betweenness: shortest-path pairs crossing each edge."""
    return _edge_betweenness(g.graph)


def _edge_betweenness(graph: nx.Graph) -> dict[Edge, float]:
    raw = nx.edge_betweenness_centrality(graph, normalized=False)
    scores = {canonical_edge(u, v): float(val) for (u, v), val in raw.items()}
    return dict(sorted(scores.items()))


def _most_valuable_edge(scores: dict[Edge, float]) -> Edge:
    """Highest score; ties go to the lexicographically smallest pair."""
    top = max(scores.values())
    slack = TIE_TOLERANCE * max(1.0, abs(top))
    return min(edge for edge, val in scores.items() if val >= top - slack)


@dataclass(frozen=True, slots=True)
class GNSplit:
    """One split event: the edge whose removal raised the component count."""

    removed_edge: Edge
    partition: Partition
    edges_removed: int
    modularity: float
    reference_fractions: tuple[float, ...] | None = None


@dataclass(frozen=True, slots=True)
class GNDendrogram:
    entries: tuple[GNSplit, ...]
    edges_removed_total: int
    removal_order: tuple[Edge, ...]

    @property
    def first_cut(self) -> Partition:
        return self.entries[0].partition

    def partitions(self) -> list[Partition]:
        return [entry.partition for entry in self.entries]


def _components_partition(graph: nx.Graph) -> Partition:
    comps = [frozenset(c) for c in nx.connected_components(graph)]
    comps.sort(key=lambda c: (-len(c), min(c)))
    return Partition.from_blocks(comps)


def girvan_newman(
    g: LayerGraph, stop: int = 1, *, reference_count: int | None = None
) -> GNDendrogram:
    """Remove max edge-betweenness edges until ``stop`` splits are recorded.

    Betweenness is recomputed after every removal. Components of a
    disconnected input are handled together: pairs in different components
    never contribute, so each component is cut by its own scores. Community
    indices follow component order (size descending, ties by smallest id).
    ``reference_count`` adds fractions over a larger denominator, e.g. the
    full layer when ``g`` is its giant component.
    """
    if stop < 1:
        raise ValueError("stop must be at least 1")

    work = nx.Graph(g.graph)
    components = nx.number_connected_components(work)
    entries: list[GNSplit] = []
    removed: list[Edge] = []

    while len(entries) < stop:
        if work.number_of_edges() == 0:
            raise ExhaustedEdges(stop, len(entries))
        edge = _most_valuable_edge(_edge_betweenness(work))
        work.remove_edge(*edge)
        removed.append(edge)
        if nx.has_path(work, *edge):
            continue

        components += 1
        partition = _components_partition(work)
        ref = None
        if reference_count:
            ref = tuple(size / reference_count for size in partition.community_sizes)
        entries.append(
            GNSplit(
                removed_edge=edge,
                partition=partition,
                edges_removed=len(removed),
                modularity=modularity(g, partition),
                reference_fractions=ref,
            )
        )
        logger.debug(
            "split %d after %d removals: edge %s-%s, %d components",
            len(entries),
            len(removed),
            edge[0],
            edge[1],
            components,
        )

    return GNDendrogram(
        entries=tuple(entries), edges_removed_total=len(removed), removal_order=tuple(removed)
    )
