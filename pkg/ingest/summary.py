"""Per-layer tallies of a resolved network."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from network.build import layer
from network.components import connected_components
from network.types import EdgeKind, MultiplexNetwork, PersonId


@dataclass(frozen=True, slots=True)
class DanglingRef:
    source: PersonId
    target: PersonId
    kind: EdgeKind


@dataclass(frozen=True, slots=True)
class IngestSummary:
    """Node count, edges per kind and giant-component size per kind."""

    node_count: int
    edges_per_kind: dict[EdgeKind, int]
    giant_component_per_kind: dict[EdgeKind, int]
    dangling_references: tuple[DanglingRef, ...] = field(default_factory=tuple)

    @property
    def total_edges(self) -> int:
        return sum(self.edges_per_kind.values())

    def rows(self) -> list[list[Any]]:
        """Table rows: kind, edges, giant component size."""
        return [
            [kind.label, self.edges_per_kind[kind], self.giant_component_per_kind[kind]]
            for kind in EdgeKind
        ]

    def to_dict(self) -> dict[str, Any]:
        return {
            "node_count": self.node_count,
            "edges_per_kind": {k.value: v for k, v in self.edges_per_kind.items()},
            "giant_component_per_kind": {
                k.value: v for k, v in self.giant_component_per_kind.items()
            },
            "total_edges": self.total_edges,
            "dangling_references": [
                {"source": d.source, "target": d.target, "kind": d.kind.value}
                for d in self.dangling_references
            ],
        }


def _giant_size(net: MultiplexNetwork, kind: EdgeKind) -> int:
    if len(net) == 0:
        return 0
    return len(connected_components(layer(net, kind))[0])


def summarize(
    net: MultiplexNetwork, dangling: tuple[DanglingRef, ...] = ()
) -> IngestSummary:
    """Edge and giant-component tallies for every kind.

    Giant-component sizes count isolates, so an edgeless layer reports 1 for
    any non-empty network.
    """
    return IngestSummary(
        node_count=len(net),
        edges_per_kind={kind: net.edge_count(kind) for kind in EdgeKind},
        giant_component_per_kind={kind: _giant_size(net, kind) for kind in EdgeKind},
        dangling_references=tuple(dangling),
    )
