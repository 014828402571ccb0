"""Construction of multiplex networks and per-layer extraction."""

from __future__ import annotations

from typing import Iterable

from core.errors import MalformedRecord, SelfLoop, UnknownEndpoint
from utils.logging_utils.app_logger import app_logger

from .types import EdgeKind, LayerGraph, MultiplexNetwork, PersonId, canonical_edge

logger = app_logger.get_logger(__name__)


def build_network(
    nodes: Iterable[tuple[PersonId, str]],
    edges: Iterable[tuple[PersonId, PersonId, EdgeKind]],
) -> MultiplexNetwork:
    """Validate typed edges and freeze them into a :class:`MultiplexNetwork`.

    Repeated ``(pair, kind)`` triples and symmetric duplicates collapse to one
    edge; the same pair may still appear in several layers.
    """
    names: dict[PersonId, str] = {}
    for node, name in nodes:
        if not node.strip():
            raise MalformedRecord(0, "id: person ids must be non-empty")
        names[node] = name

    layers: dict[EdgeKind, set[tuple[PersonId, PersonId]]] = {kind: set() for kind in EdgeKind}
    collapsed = 0
    for u, v, kind in edges:
        if u == v:
            raise SelfLoop(u)
        for endpoint in (u, v):
            if endpoint not in names:
                raise UnknownEndpoint(endpoint, (u, v))
        pair = canonical_edge(u, v)
        bucket = layers[EdgeKind(kind)]
        if pair in bucket:
            collapsed += 1
        bucket.add(pair)

    if collapsed:
        logger.debug("collapsed %d duplicate edges", collapsed)
    return MultiplexNetwork(
        names=names, layers={kind: frozenset(pairs) for kind, pairs in layers.items()}
    )


def layer(net: MultiplexNetwork, kind: EdgeKind) -> LayerGraph:
    """Single-layer graph over every network node (isolates included)."""
    return LayerGraph(net.nodes, net.layers[kind], kind)
