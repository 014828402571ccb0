"""Community assignments, comparison and quality scores."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

import networkx as nx
import numpy as np
from scipy.optimize import linear_sum_assignment

from core.errors import NodeSetMismatch
from network.types import LayerGraph, PersonId


@dataclass(frozen=True, eq=False)
class Partition:
    """Node to community index; indices are dense from 0."""

    assignment: Mapping[PersonId, int]

    def __post_init__(self) -> None:
        ordered = dict(sorted(self.assignment.items()))
        used = sorted(set(ordered.values()))
        if used != list(range(len(used))):
            raise ValueError(f"community indices must be dense from 0, got {used}")
        object.__setattr__(self, "assignment", MappingProxyType(ordered))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[PersonId]]) -> "Partition":
        """Number blocks in the order given; empty blocks are skipped."""
        assignment: dict[PersonId, int] = {}
        index = 0
        for block in blocks:
            members = list(block)
            if not members:
                continue
            for node in members:
                if node in assignment:
                    raise ValueError(f"node {node!r} assigned twice")
                assignment[node] = index
            index += 1
        return cls(assignment)

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def k(self) -> int:
        return len(set(self.assignment.values()))

    @property
    def nodes(self) -> frozenset[PersonId]:
        return frozenset(self.assignment)

    @property
    def blocks(self) -> list[frozenset[PersonId]]:
        out: list[set[PersonId]] = [set() for _ in range(self.k)]
        for node, idx in self.assignment.items():
            out[idx].add(node)
        return [frozenset(b) for b in out]

    @property
    def community_sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    @property
    def fractions(self) -> list[float]:
        n = self.n
        return [size / n for size in self.community_sizes] if n else []

    def community_of(self, node: PersonId) -> int:
        return self.assignment[node]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return dict(self.assignment) == dict(other.assignment)

    def __hash__(self) -> int:
        return hash(tuple(self.assignment.items()))


@dataclass(frozen=True, slots=True)
class PartitionComparison:
    migrations: int
    matching: dict[int, int]
    migrated: tuple[PersonId, ...]


def compare_partitions(p: Partition, q: Partition) -> PartitionComparison:
    """Match blocks by maximum total overlap and count nodes that change block.

    The matching is an exact assignment over the overlap matrix, so any
    number of blocks is handled; blocks left unmatched count as migrations.
    """
    if p.nodes != q.nodes:
        missing = sorted(p.nodes ^ q.nodes)
        raise NodeSetMismatch(f"partitions cover different nodes: {missing[:5]}")

    overlap = np.zeros((p.k, q.k), dtype=int)
    for node, i in p.assignment.items():
        overlap[i, q.assignment[node]] += 1
    rows, cols = linear_sum_assignment(overlap, maximize=True)
    matching = {int(r): int(c) for r, c in zip(rows, cols)}

    migrated = tuple(
        node
        for node, i in p.assignment.items()
        if matching.get(i) != q.assignment[node]
    )
    return PartitionComparison(len(migrated), matching, migrated)


def modularity(g: LayerGraph, partition: Partition) -> float:
    """Newman modularity of ``partition`` on ``g`` (0 for edgeless graphs)."""
    if g.number_of_edges() == 0:
        return 0.0
    if partition.nodes != frozenset(g.nodes):
        raise NodeSetMismatch("partition does not cover the graph's nodes")
    return float(nx.community.modularity(g.graph, partition.blocks))


def hub_community(g: LayerGraph, partition: Partition) -> tuple[PersonId, int, int]:
    """The highest-degree node (ties by id), its community index and that community's size."""
    hub = min(g.nodes, key=lambda v: (-g.graph.degree(v), v))
    idx = partition.community_of(hub)
    return hub, idx, partition.community_sizes[idx]
