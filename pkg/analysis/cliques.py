"""Maximal and maximum clique enumeration with overlap statistics.

Enumeration is exact (Bron-Kerbosch with pivoting via networkx). Worst-case
runtime is exponential; layers of a few hundred nodes are fine.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx

from network.components import component_index
from network.types import LayerGraph, PersonId

Clique = tuple[PersonId, ...]


@dataclass(frozen=True, slots=True)
class CliqueSet:
    """Cliques sorted by size descending then by sorted member list."""

    cliques: tuple[Clique, ...]
    size_of_maximum: int
    membership_counts: dict[PersonId, int]
    components: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.cliques)

    def as_sets(self) -> list[frozenset[PersonId]]:
        return [frozenset(c) for c in self.cliques]


def _sort_key(clique: Clique) -> tuple[int, Clique]:
    return (-len(clique), clique)


def _build(g: LayerGraph, cliques: Iterable[Clique]) -> CliqueSet:
    ordered = tuple(sorted(cliques, key=_sort_key))
    top = len(ordered[0]) if ordered else 0
    counts = Counter(node for c in ordered if len(c) == top for node in c)
    comp = component_index(g) if ordered else {}
    return CliqueSet(
        cliques=ordered,
        size_of_maximum=top,
        membership_counts=dict(sorted(counts.items())),
        components=tuple(comp[c[0]] for c in ordered),
    )


def maximal_cliques(
    g: LayerGraph, *, min_size: int = 1, include_trivial: bool = False
) -> CliqueSet:
    """Every maximal clique of at least ``min_size`` nodes.

    Isolated nodes form size-1 maximal cliques; they are dropped unless
    ``include_trivial`` is set.
    """
    found = (tuple(sorted(c)) for c in nx.find_cliques(g.graph))
    floor = max(min_size, 1 if include_trivial else 2)
    return _build(g, (c for c in found if len(c) >= floor))


def maximum_cliques(g: LayerGraph, *, include_trivial: bool = False) -> CliqueSet:
    """The maximal cliques of largest cardinality and per-node membership."""
    every = maximal_cliques(g, include_trivial=include_trivial)
    top = every.size_of_maximum
    return _build(g, (c for c in every.cliques if len(c) == top))


def clique_overlap(a: Iterable[PersonId], b: Iterable[PersonId]) -> tuple[int, float]:
    """Shared members and their share of the larger clique."""
    sa, sb = set(a), set(b)
    shared = len(sa & sb)
    denom = max(len(sa), len(sb))
    return shared, (shared / denom if denom else 0.0)


def overlap_matrix(cliques: Sequence[Iterable[PersonId]]) -> list[list[int]]:
    sets = [set(c) for c in cliques]
    return [[len(a & b) for b in sets] for a in sets]


def mutual_intersection(cliques: Sequence[Iterable[PersonId]]) -> frozenset[PersonId]:
    """Nodes shared by every clique (empty for no cliques)."""
    if not cliques:
        return frozenset()
    common = set(cliques[0])
    for c in cliques[1:]:
        common &= set(c)
    return frozenset(common)
