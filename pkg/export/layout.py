"""Deterministic force-directed layout.

Degree-weighted scheme: every node has mass ``deg + 1``; linked nodes
attract linearly with distance, every pair repels with
``repulsion * m_u * m_v / distance``, and a weak gravity pulls each node toward
the origin. Forces are gathered for all nodes and then applied, so update
order never matters. Each node's displacement is capped by a linearly cooling
limit.

Initial positions come from a 64-bit linear congruential generator
(multiplier 6364136223846793005, increment 1442695040888963407, top 53 bits
as the uniform draw), placed uniformly on the unit disc in node order, so a
seed produces the same start on every platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from network.types import LayerGraph, PersonId

MASK64 = (1 << 64) - 1
# minimum squared distance used in the repulsion term
MIN_DIST2 = 1e-18


class Lcg64:
    """Portable 64-bit linear congruential generator."""

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407

    def __init__(self, seed: int) -> None:
        self.state = (seed ^ 0x9E3779B97F4A7C15) & MASK64

    def next_u64(self) -> int:
        self.state = (self.state * self.MULTIPLIER + self.INCREMENT) & MASK64
        return self.state

    def random(self) -> float:
        """Uniform float in ``[0, 1)``."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


@dataclass(frozen=True, slots=True)
class LayoutParams:
    attraction: float = 1.0
    repulsion: float = 2.0
    gravity: float = 0.05
    step: float = 0.3
    max_displacement: float = 1.0
    min_displacement: float = 0.01


@dataclass(frozen=True, slots=True)
class LayoutResult:
    positions: dict[PersonId, tuple[float, float]]
    seed: int
    iterations: int
    params: LayoutParams
    # largest node displacement in each iteration
    displacements: tuple[float, ...] = ()


def unit_disc_positions(nodes: tuple[PersonId, ...], seed: int) -> np.ndarray:
    rng = Lcg64(seed)
    out = np.empty((len(nodes), 2))
    for i in range(len(nodes)):
        r = math.sqrt(rng.random())
        theta = 2.0 * math.pi * rng.random()
        out[i] = (r * math.cos(theta), r * math.sin(theta))
    return out


def force_layout(
    g: LayerGraph,
    seed: int,
    iterations: int = 500,
    params: LayoutParams | None = None,
    *,
    initial: Mapping[PersonId, tuple[float, float]] | None = None,
) -> LayoutResult:
    """Run the force simulation and return final positions.

    ``initial`` replaces the seeded start (every node must be present).
    """
    if iterations < 1:
        raise ValueError("iterations must be at least 1")
    params = params or LayoutParams()
    nodes = g.nodes
    n = len(nodes)
    if initial is not None:
        pos = np.array([initial[v] for v in nodes], dtype=float).reshape(n, 2)
    else:
        pos = unit_disc_positions(nodes, seed)

    A = g.adjacency_matrix()
    mass = A.sum(axis=1) + 1.0
    mass_pairs = np.outer(mass, mass)
    history: list[float] = []

    for it in range(iterations):
        delta = pos[:, None, :] - pos[None, :, :]
        dist2 = np.maximum((delta**2).sum(axis=-1), MIN_DIST2)
        np.fill_diagonal(dist2, np.inf)

        repulse = (params.repulsion * mass_pairs / dist2)[:, :, None] * delta
        attract = -params.attraction * A[:, :, None] * delta
        force = repulse.sum(axis=1) + attract.sum(axis=1)
        force -= params.gravity * mass[:, None] * pos

        disp = params.step * force / mass[:, None]
        cooling = 1.0 - it / iterations
        cap = params.min_displacement + (params.max_displacement - params.min_displacement) * cooling
        lengths = np.sqrt((disp**2).sum(axis=1))
        scale = np.where(lengths > cap, cap / np.maximum(lengths, MIN_DIST2), 1.0)
        disp *= scale[:, None]
        pos = pos + disp
        history.append(float(np.max(np.sqrt((disp**2).sum(axis=1)))) if n else 0.0)

    positions = {v: (float(pos[i, 0]), float(pos[i, 1])) for i, v in enumerate(nodes)}
    return LayoutResult(positions, seed, iterations, params, tuple(history))
