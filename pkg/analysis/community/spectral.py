"""Fiedler-vector bisection of a connected graph."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np
import scipy.linalg
import scipy.sparse
import scipy.sparse.linalg

from core.errors import DegenerateSpectrum, DisconnectedGraph
from network.components import is_connected
from network.types import LayerGraph, PersonId
from utils.logging_utils.app_logger import app_logger

from .partition import Partition, modularity

logger = app_logger.get_logger(__name__)

SPECTRAL_TOL = 1e-8
# entries this close to zero count as zero for the sign rule
ZERO_TOL = 1e-10
DENSE_LIMIT = 2000


def laplacian(g: LayerGraph) -> tuple[np.ndarray, np.ndarray]:
    """``(L, D)`` with ``L = D - A`` in node order."""
    A = g.adjacency_matrix()
    D = np.diag(A.sum(axis=1))
    return D - A, D


@dataclass(frozen=True, eq=False)
class SpectralBisection:
    fiedler_value: float
    fiedler_vector: Mapping[PersonId, float]
    partition: Partition
    laplacian: np.ndarray
    degree_matrix: np.ndarray
    residual: float
    multiplicity: int = 1
    modularity: float = 0.0

    @property
    def degenerate(self) -> bool:
        return self.multiplicity > 1


def _dense_pair(L: np.ndarray) -> tuple[float, np.ndarray, np.ndarray]:
    values, vectors = scipy.linalg.eigh(L)
    return float(values[1]), vectors[:, 1], values


def _sparse_pair(L: np.ndarray) -> tuple[float, np.ndarray, np.ndarray]:
    n = L.shape[0]
    k = min(3, n - 1)
    v0 = np.random.default_rng(0).standard_normal(n)
    values, vectors = scipy.sparse.linalg.eigsh(
        scipy.sparse.csr_matrix(L), k=k, sigma=-1e-3, which="LM", v0=v0
    )
    order = np.argsort(values)
    values, vectors = values[order], vectors[:, order]
    return float(values[1]), vectors[:, 1], values


def _fix_sign(vec: np.ndarray) -> np.ndarray:
    """Make the first entry (in node order) away from zero non-negative."""
    for x in vec:
        if abs(x) > ZERO_TOL:
            return vec if x > 0 else -vec
    return vec


def fiedler_bisection(
    g: LayerGraph,
    tol: float = SPECTRAL_TOL,
    *,
    method: str = "auto",
    strict: bool = False,
) -> SpectralBisection:
    """Split ``g`` by the signs of the Laplacian's second eigenvector.

    Zero entries join the non-negative block. The vector's sign is fixed so
    the smallest id (or the first nonzero entry after it) is non-negative,
    which makes block 0 the one holding the smallest id. ``method`` is
    ``"dense"`` (symmetric eigendecomposition), ``"sparse"`` (shift-invert
    Lanczos) or ``"auto"``. A repeated Fiedler value is logged and recorded;
    ``strict=True`` raises :class:`DegenerateSpectrum` instead.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if g.number_of_nodes() < 2 or not is_connected(g):
        raise DisconnectedGraph("spectral bisection needs a connected graph with 2+ nodes")

    L, D = laplacian(g)
    n = L.shape[0]
    if method == "auto":
        method = "dense" if n <= DENSE_LIMIT else "sparse"
    if method == "dense" or n < 4:
        lam, vec, spectrum = _dense_pair(L)
    elif method == "sparse":
        lam, vec, spectrum = _sparse_pair(L)
    else:
        raise ValueError(f"unknown spectral method {method!r}")

    gap_tol = max(tol, 1e-9 * max(1.0, abs(lam)))
    multiplicity = int(np.sum(np.abs(spectrum[1:] - lam) <= gap_tol))
    if multiplicity > 1:
        logger.warning("Fiedler value %.6g has multiplicity %d", lam, multiplicity)
        if strict:
            raise DegenerateSpectrum(lam, multiplicity)

    vec = vec / np.linalg.norm(vec)
    # remove any drift back toward the constant vector
    vec = vec - vec.mean()
    vec = _fix_sign(vec / np.linalg.norm(vec))
    residual = float(np.linalg.norm(L @ vec - lam * vec))

    nonneg = [node for node, x in zip(g.nodes, vec) if x >= -ZERO_TOL]
    neg = [node for node, x in zip(g.nodes, vec) if x < -ZERO_TOL]
    partition = Partition.from_blocks([nonneg, neg])

    return SpectralBisection(
        fiedler_value=lam,
        fiedler_vector=MappingProxyType({node: float(x) for node, x in zip(g.nodes, vec)}),
        partition=partition,
        laplacian=L,
        degree_matrix=D,
        residual=residual,
        multiplicity=multiplicity,
        modularity=modularity(g, partition),
    )
