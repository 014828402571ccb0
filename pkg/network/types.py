"""Immutable multiplex network and single-layer graph types."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

import networkx as nx
import numpy as np

from core.errors import UnknownNode, UnknownRelationKind

PersonId = str
Edge = tuple[PersonId, PersonId]


class EdgeKind(str, Enum):
    """The five relationship types between profiles."""

    WORK = "work"
    ALLIANCE = "alliance"
    FRIENDSHIP = "friendship"
    FAMILY = "family"
    RIVALRY = "rivalry"

    @classmethod
    def parse(cls, token: str, *, line: int | None = None) -> "EdgeKind":
        """Return the kind for ``token`` (case-insensitive)."""
        try:
            return cls(str(token).strip().lower())
        except ValueError:
            raise UnknownRelationKind(str(token), line) from None

    @property
    def label(self) -> str:
        return self.value.capitalize()


def canonical_edge(u: PersonId, v: PersonId) -> Edge:
    """Order an unordered pair so ``(u, v)`` and ``(v, u)`` compare equal."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class MultiplexNetwork:
    """Node registry plus one edge set per :class:`EdgeKind`.

    Instances are built through :func:`network.build.build_network`, which
    enforces the endpoint and self-loop rules.
    """

    names: Mapping[PersonId, str]
    layers: Mapping[EdgeKind, frozenset[Edge]]
    _node_order: tuple[PersonId, ...] = field(repr=False, compare=False, default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", MappingProxyType(dict(sorted(self.names.items()))))
        full = {kind: frozenset(self.layers.get(kind, frozenset())) for kind in EdgeKind}
        object.__setattr__(self, "layers", MappingProxyType(full))
        object.__setattr__(self, "_node_order", tuple(self.names))

    @property
    def nodes(self) -> tuple[PersonId, ...]:
        """Node ids sorted ascending."""
        return self._node_order

    def __contains__(self, node: object) -> bool:
        return node in self.names

    def __len__(self) -> int:
        return len(self._node_order)

    def name(self, node: PersonId) -> str:
        try:
            return self.names[node]
        except KeyError:
            raise UnknownNode(node) from None

    def edges(self, kind: EdgeKind) -> tuple[Edge, ...]:
        """Edges of one layer, sorted."""
        return tuple(sorted(self.layers[kind]))

    def edge_count(self, kind: EdgeKind | None = None) -> int:
        if kind is not None:
            return len(self.layers[kind])
        return sum(len(edges) for edges in self.layers.values())

    def kinds_between(self, u: PersonId, v: PersonId) -> tuple[EdgeKind, ...]:
        """Every layer in which ``u`` and ``v`` are related."""
        pair = canonical_edge(u, v)
        return tuple(kind for kind in EdgeKind if pair in self.layers[kind])


class LayerGraph:
    """One simple undirected graph with a provenance tag.

    Nodes are held in ascending id order and edges as canonical pairs; the
    backing :class:`networkx.Graph` is frozen so callers cannot mutate it.
    """

    __slots__ = ("_kind", "_nodes", "_index", "_graph")

    def __init__(
        self,
        nodes: Iterable[PersonId],
        edges: Iterable[Edge],
        kind: EdgeKind | None = None,
    ) -> None:
        ordered = tuple(sorted(set(nodes)))
        graph = nx.Graph()
        graph.add_nodes_from(ordered)
        for u, v in sorted(canonical_edge(a, b) for a, b in edges):
            if u not in graph or v not in graph:
                missing = u if u not in graph else v
                raise UnknownNode(missing)
            graph.add_edge(u, v)
        self._kind = kind
        self._nodes = ordered
        self._index = MappingProxyType({node: i for i, node in enumerate(ordered)})
        self._graph = nx.freeze(graph)

    # -----------------------------
    # Accessors
    # -----------------------------

    @property
    def kind(self) -> EdgeKind | None:
        return self._kind

    @property
    def nodes(self) -> tuple[PersonId, ...]:
        return self._nodes

    @property
    def graph(self) -> nx.Graph:
        """Read-only networkx view used by the analysis modules."""
        return self._graph

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(canonical_edge(u, v) for u, v in self._graph.edges()))

    def number_of_nodes(self) -> int:
        return len(self._nodes)

    def number_of_edges(self) -> int:
        return self._graph.number_of_edges()

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, node: object) -> bool:
        return node in self._index

    def __iter__(self) -> Iterator[PersonId]:
        return iter(self._nodes)

    def index(self, node: PersonId) -> int:
        """Row/column of ``node`` in :meth:`adjacency_matrix`."""
        try:
            return self._index[node]
        except KeyError:
            raise UnknownNode(node) from None

    def require(self, node: PersonId) -> None:
        if node not in self._index:
            raise UnknownNode(node)

    def has_edge(self, u: PersonId, v: PersonId) -> bool:
        return self._graph.has_edge(u, v)

    def neighbors(self, node: PersonId) -> tuple[PersonId, ...]:
        self.require(node)
        return tuple(sorted(self._graph.neighbors(node)))

    def adjacency_matrix(self) -> np.ndarray:
        """Dense symmetric 0/1 matrix ``A`` in node order."""
        return nx.to_numpy_array(self._graph, nodelist=list(self._nodes), dtype=float)

    def subgraph(self, nodes: Iterable[PersonId]) -> "LayerGraph":
        """Induced subgraph carrying the same kind tag."""
        keep = set(nodes)
        for node in keep:
            self.require(node)
        edges = [(u, v) for u, v in self._graph.edges() if u in keep and v in keep]
        return LayerGraph(keep, edges, self._kind)

    # -----------------------------
    # Value semantics
    # -----------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LayerGraph):
            return NotImplemented
        return (
            self._kind == other._kind
            and self._nodes == other._nodes
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self._kind, self._nodes, self.edges))

    def __repr__(self) -> str:
        kind = self._kind.value if self._kind else "-"
        return f"LayerGraph(kind={kind}, nodes={len(self._nodes)}, edges={self.number_of_edges()})"
