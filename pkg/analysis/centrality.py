"""Degree, betweenness, closeness and eigenvector centrality.

All four metrics take a :class:`~network.types.LayerGraph`; closeness,
eigenvector centrality and the ranked table need a connected graph, so callers
pass the giant component.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

import networkx as nx
import numpy as np

from core.errors import DisconnectedGraph, NoConvergence
from network.components import is_connected
from network.degree import degree_sequence, neighbor_degree_histogram
from network.types import LayerGraph, PersonId
from utils.logging_utils.app_logger import app_logger

logger = app_logger.get_logger(__name__)

EIGEN_TOL = 1e-10
EIGEN_MAX_ITER = 10_000


class Metric(str, Enum):
    DEGREE = "degree"
    BETWEENNESS = "betweenness"
    CLOSENESS = "closeness"
    EIGENVECTOR = "eigenvector"

    @property
    def heading(self) -> str:
        return _HEADINGS[self]


_HEADINGS = {
    Metric.DEGREE: "Degree",
    Metric.BETWEENNESS: "Betweenness",
    Metric.CLOSENESS: "Closeness",
    Metric.EIGENVECTOR: "Eigencentrality",
}


@dataclass(frozen=True, slots=True)
class CentralityScores:
    """Per-node values of one metric."""

    metric: Metric
    scores: Mapping[PersonId, float]
    normalization: str
    eigenvalue: float | None = None
    iterations: int | None = None

    def ranked(self) -> list[tuple[PersonId, float]]:
        """All nodes by score descending, ties by id ascending."""
        return sorted(self.scores.items(), key=lambda item: (-item[1], item[0]))

    def top(self, k: int) -> list[tuple[PersonId, float]]:
        return self.ranked()[:k]


def _require_connected(g: LayerGraph, what: str) -> None:
    if not is_connected(g):
        raise DisconnectedGraph(f"{what} needs a connected graph; pass the giant component")


def degree_centrality(g: LayerGraph) -> CentralityScores:
    """Raw degree counts."""
    return CentralityScores(Metric.DEGREE, degree_sequence(g), "raw edge count")


def betweenness(g: LayerGraph) -> CentralityScores:
    """Shortest-path betweenness normalized by ``(n-1)(n-2)/2``.

    Disconnected pairs contribute nothing, so the full layer is accepted.
    """
    raw = nx.betweenness_centrality(g.graph, normalized=True)
    scores = {node: float(raw[node]) for node in g.nodes}
    return CentralityScores(Metric.BETWEENNESS, scores, "pairs / ((n-1)(n-2)/2)")


def closeness(g: LayerGraph) -> CentralityScores:
    """``(n-1) / sum of distances`` on a connected graph."""
    _require_connected(g, "closeness")
    raw = nx.closeness_centrality(g.graph)
    scores = {node: float(raw[node]) for node in g.nodes}
    return CentralityScores(Metric.CLOSENESS, scores, "(n-1) / sum(d)")


def eigencentrality(
    g: LayerGraph,
    tol: float = EIGEN_TOL,
    max_iter: int = EIGEN_MAX_ITER,
    *,
    method: str = "power",
) -> CentralityScores:
    """Principal eigenvector of ``A`` with unit Euclidean norm.

    ``method="power"`` iterates on ``A + I`` (the shift breaks the oscillation
    of bipartite graphs) until ``||Ax - lambda x|| <= tol``; ``method="dense"``
    uses a full symmetric eigendecomposition.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    _require_connected(g, "eigenvector centrality")
    A = g.adjacency_matrix()
    n = A.shape[0]

    if n == 1:
        vec, lam, iterations = np.ones(1), 0.0, 0
    elif method == "dense":
        values, vectors = np.linalg.eigh(A)
        vec, lam, iterations = vectors[:, -1], float(values[-1]), 0
    elif method == "power":
        vec, lam, iterations = _power_iteration(A, tol, max_iter)
    else:
        raise ValueError(f"unknown eigen method {method!r}")

    vec = np.abs(vec)
    vec = vec / np.linalg.norm(vec)
    scores = {node: float(vec[i]) for i, node in enumerate(g.nodes)}
    return CentralityScores(
        Metric.EIGENVECTOR, scores, "unit L2 norm", eigenvalue=lam, iterations=iterations
    )


def _power_iteration(A: np.ndarray, tol: float, max_iter: int) -> tuple[np.ndarray, float, int]:
    n = A.shape[0]
    shifted = A + np.eye(n)
    x = np.full(n, 1.0 / np.sqrt(n))
    residual = np.inf
    for it in range(1, max_iter + 1):
        y = shifted @ x
        y /= np.linalg.norm(y)
        Ay = A @ y
        lam = float(y @ Ay)
        residual = float(np.linalg.norm(Ay - lam * y))
        x = y
        if residual <= tol:
            logger.debug("power iteration converged in %d steps", it)
            return x, lam, it
    raise NoConvergence(max_iter, residual)


METRIC_FUNCS = {
    Metric.DEGREE: degree_centrality,
    Metric.BETWEENNESS: betweenness,
    Metric.CLOSENESS: closeness,
    Metric.EIGENVECTOR: eigencentrality,
}


def compute(g: LayerGraph, metric: Metric | str) -> CentralityScores:
    return METRIC_FUNCS[Metric(metric)](g)


@dataclass(frozen=True)
class RankedTable:
    """Top-k nodes per metric, shaped like a four-column centrality table."""

    k: int
    scores: dict[Metric, CentralityScores]
    node_count: int
    metrics: tuple[Metric, ...] = field(default=tuple(Metric))

    def rows(self, metric: Metric | str) -> list[tuple[PersonId, dict[Metric, float]]]:
        """Top-k nodes by ``metric`` with every computed value attached."""
        metric = Metric(metric)
        return [
            (node, {m: self.scores[m].scores[node] for m in self.metrics})
            for node, _ in self.scores[metric].top(self.k)
        ]

    def top(self, metric: Metric | str) -> list[tuple[PersonId, float]]:
        return self.scores[Metric(metric)].top(self.k)

    def side_by_side(self) -> list[list[object]]:
        """``k`` rows of ``(node, value)`` pairs, one pair per metric."""
        columns = [self.top(m) for m in self.metrics]
        out: list[list[object]] = []
        for i in range(self.k):
            row: list[object] = []
            for col in columns:
                row.extend(col[i] if i < len(col) else ("", ""))
            out.append(row)
        return out


def ranked_table(
    g: LayerGraph, k: int, metrics: Iterable[Metric | str] | None = None
) -> RankedTable:
    """Score every metric and keep the top ``k`` per metric."""
    if k < 1:
        raise ValueError("k must be at least 1")
    _require_connected(g, "ranked table")
    chosen = tuple(Metric(m) for m in metrics) if metrics else tuple(Metric)
    scores = {m: compute(g, m) for m in chosen}
    return RankedTable(k=k, scores=scores, node_count=g.number_of_nodes(), metrics=chosen)


@dataclass(frozen=True, slots=True)
class NeighborDegreeReport:
    node: PersonId
    degree: int
    histogram: dict[int, int]
    top_neighbor: PersonId | None
    top_neighbor_degree: int
    mean_neighbor_degree: float


def neighbor_degree_report(g: LayerGraph, v: PersonId) -> NeighborDegreeReport:
    """Degree histogram of ``v``'s neighbors and its best-connected neighbor."""
    hist = neighbor_degree_histogram(g, v)
    degrees = {u: g.graph.degree(u) for u in g.neighbors(v)}
    top = min(degrees, key=lambda u: (-degrees[u], u)) if degrees else None
    total = sum(hist.values())
    mean = sum(k * c for k, c in hist.items()) / total if total else 0.0
    return NeighborDegreeReport(
        node=v,
        degree=total,
        histogram=hist,
        top_neighbor=top,
        top_neighbor_degree=degrees[top] if top is not None else 0,
        mean_neighbor_degree=mean,
    )
