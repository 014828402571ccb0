"""Brute-force reference implementations and graph builders used by the tests."""

from __future__ import annotations

from collections import deque
from itertools import combinations

import networkx as nx
import numpy as np

from network.types import EdgeKind, LayerGraph


def make_graph(edges, nodes=(), kind=EdgeKind.ALLIANCE) -> LayerGraph:
    every = set(nodes) | {v for e in edges for v in e}
    return LayerGraph(every, edges, kind)


def random_graph(n: int, p: float, seed: int, *, connected: bool = False) -> LayerGraph:
    """G(n, p) with zero-padded string ids; ``connected`` retries with new seeds."""
    while True:
        raw = nx.gnp_random_graph(n, p, seed=seed)
        if not connected or (n > 0 and nx.is_connected(raw)):
            break
        seed += 10_007
    label = {i: f"n{i:02d}" for i in raw.nodes}
    return LayerGraph(label.values(), [(label[u], label[v]) for u, v in raw.edges], EdgeKind.WORK)


def _bfs_dist(g: LayerGraph, source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _shortest_paths(g: LayerGraph, s: str, t: str, to_t: dict[str, int]) -> list[list[str]]:
    """Every shortest s-t path, by walking edges that step one closer to ``t``."""
    if s == t:
        return [[t]]
    out = []
    for w in g.neighbors(s):
        if to_t.get(w) == to_t[s] - 1:
            out.extend([s, *rest] for rest in _shortest_paths(g, w, t, to_t))
    return out


def naive_betweenness(g: LayerGraph) -> dict[str, float]:
    """Enumerate all shortest paths for every pair; normalized by (n-1)(n-2)/2."""
    n = g.number_of_nodes()
    scores = {v: 0.0 for v in g.nodes}
    for s, t in combinations(g.nodes, 2):
        to_t = _bfs_dist(g, t)
        if s not in to_t:
            continue
        paths = _shortest_paths(g, s, t, to_t)
        for path in paths:
            for v in path[1:-1]:
                scores[v] += 1.0 / len(paths)
    if n > 2:
        scale = (n - 1) * (n - 2) / 2
        scores = {v: x / scale for v, x in scores.items()}
    return scores


def brute_force_maximal_cliques(g: LayerGraph, *, include_trivial: bool = False) -> set[frozenset[str]]:
    """Check every node subset; a clique is kept when no outside node extends it."""
    nodes = list(g.nodes)
    n = len(nodes)
    adj = [0] * n
    for i, u in enumerate(nodes):
        for j, v in enumerate(nodes):
            if g.has_edge(u, v):
                adj[i] |= 1 << j

    is_clique = [False] * (1 << n)
    is_clique[0] = True
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        is_clique[mask] = is_clique[rest] and (rest & ~adj[low]) == 0

    out: set[frozenset[str]] = set()
    floor = 1 if include_trivial else 2
    for mask in range(1, 1 << n):
        if not is_clique[mask] or bin(mask).count("1") < floor:
            continue
        extendable = any(
            not (mask >> w) & 1 and (mask & ~adj[w]) == 0 for w in range(n)
        )
        if not extendable:
            out.add(frozenset(nodes[i] for i in range(n) if (mask >> i) & 1))
    return out


def dense_fiedler(g: LayerGraph) -> tuple[float, float, np.ndarray]:
    """``(lambda_2, lambda_3, v_2)`` from a full eigendecomposition of ``D - A``."""
    A = g.adjacency_matrix()
    L = np.diag(A.sum(axis=1)) - A
    values, vectors = np.linalg.eigh(L)
    vec = vectors[:, 1]
    nonzero = np.flatnonzero(np.abs(vec) > 1e-10)
    if nonzero.size and vec[nonzero[0]] < 0:
        vec = -vec
    third = float(values[2]) if len(values) > 2 else float("inf")
    return float(values[1]), third, vec


def dense_eigenvector(g: LayerGraph) -> tuple[float, np.ndarray]:
    values, vectors = np.linalg.eigh(g.adjacency_matrix())
    vec = np.abs(vectors[:, -1])
    return float(values[-1]), vec / np.linalg.norm(vec)
