"""Degree distributions and power-law exponent estimation.

Two estimators are offered. The log-log least-squares fit regresses
``log P(k)`` on ``log k`` over non-empty bins and is the default because it
also yields exponents below 1. The discrete maximum-likelihood fit follows the
usual power-law methodology and is only valid for exponents above 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np
from scipy import optimize, stats
from scipy.special import zeta

from core.errors import EmptyGraph, InsufficientSupport, InvalidExponent
from network.degree import degree_sequence
from network.types import LayerGraph, PersonId

LS_METHOD = "log-log-least-squares"
MLE_METHOD = "maximum-likelihood"
MIN_LS_BINS = 3
MIN_MLE_SAMPLES = 50
# search interval for the exact likelihood maximum
GAMMA_BOUNDS = (1.0 + 1e-6, 50.0)


@dataclass(frozen=True, slots=True)
class DegreeDistribution:
    histogram: dict[int, int]
    normalized: dict[int, float]
    n: int

    @property
    def degrees(self) -> list[int]:
        """One entry per node, ascending."""
        return [k for k, c in self.histogram.items() for _ in range(c)]


@dataclass(frozen=True, slots=True)
class PowerLawFit:
    gamma: float
    method: str
    k_min: int
    goodness: float
    support: int
    intercept: float | None = None
    # "exact" or "approximate" for maximum-likelihood fits
    estimator: str | None = None

    @property
    def label(self) -> str:
        return f"{self.method} ({self.estimator})" if self.estimator else self.method


@dataclass(frozen=True, slots=True)
class DegreeSummary:
    n: int
    mean_degree: float
    max_degree: int
    hub: PersonId
    hub_ratio: float


def degree_distribution(g: LayerGraph) -> DegreeDistribution:
    """Histogram of degrees and its normalization by node count."""
    n = g.number_of_nodes()
    if n == 0:
        raise EmptyGraph("degree distribution of an empty graph")
    counts: dict[int, int] = {}
    for k in degree_sequence(g).values():
        counts[k] = counts.get(k, 0) + 1
    hist = dict(sorted(counts.items()))
    return DegreeDistribution(hist, {k: c / n for k, c in hist.items()}, n)


def degree_summary(g: LayerGraph) -> DegreeSummary:
    """Mean and max degree, the hub (ties by id) and max/mean."""
    seq = degree_sequence(g)
    if not seq:
        raise EmptyGraph("degree summary of an empty graph")
    hub = min(seq, key=lambda v: (-seq[v], v))
    mean = sum(seq.values()) / len(seq)
    return DegreeSummary(
        n=len(seq),
        mean_degree=mean,
        max_degree=seq[hub],
        hub=hub,
        hub_ratio=seq[hub] / mean if mean else 0.0,
    )


def log_binned_distribution(
    dist: DegreeDistribution | Mapping[float, float], base: float = 2.0
) -> dict[float, float]:
    """Average ``P(k)`` over bins ``[base**i, base**(i+1))``.

    Keys are geometric bin centres; values are densities (mass divided by the
    number of integer degrees the bin spans). Degree 0 is dropped.
    """
    if base <= 1:
        raise ValueError("base must exceed 1")
    freqs = dist.normalized if isinstance(dist, DegreeDistribution) else dist
    mass: dict[int, float] = {}
    for k, p in freqs.items():
        if k <= 0 or p <= 0:
            continue
        i = int(math.floor(math.log(k, base) + 1e-12))
        mass[i] = mass.get(i, 0.0) + p
    out: dict[float, float] = {}
    for i in sorted(mass):
        lo, hi = base**i, base ** (i + 1)
        width = max(1, math.ceil(hi) - math.ceil(lo))
        out[math.sqrt(lo * hi)] = mass[i] / width
    return out


def _points(freqs: Mapping[float, float], k_min: float) -> tuple[np.ndarray, np.ndarray]:
    pts = sorted((k, p) for k, p in freqs.items() if k >= k_min and k > 0 and p > 0)
    ks = np.array([k for k, _ in pts], dtype=float)
    ps = np.array([p for _, p in pts], dtype=float)
    return ks, ps


def fit_power_law_ls(
    dist: DegreeDistribution | Mapping[float, float], k_min: float = 1
) -> PowerLawFit:
    """Least squares of ``log P(k)`` against ``log k``; ``gamma = -slope``."""
    freqs = dist.normalized if isinstance(dist, DegreeDistribution) else dist
    ks, ps = _points(freqs, k_min)
    if len(ks) < MIN_LS_BINS:
        raise InsufficientSupport(
            f"need {MIN_LS_BINS} non-empty degree bins at k >= {k_min}, found {len(ks)}"
        )
    reg = stats.linregress(np.log(ks), np.log(ps))
    r2 = float(min(1.0, max(0.0, reg.rvalue**2)))
    return PowerLawFit(
        gamma=float(-reg.slope),
        method=LS_METHOD,
        k_min=int(math.ceil(k_min)),
        goodness=r2,
        support=len(ks),
        intercept=float(reg.intercept),
    )


def _discrete_cdf(ks: np.ndarray, gamma: float, k_min: int) -> np.ndarray:
    """``P(K <= k)`` for the discrete power law starting at ``k_min``."""
    return 1.0 - zeta(gamma, ks + 1.0) / zeta(gamma, k_min)


def _ks_distance(sample: np.ndarray, gamma: float, k_min: int) -> float:
    values, counts = np.unique(sample, return_counts=True)
    empirical = np.cumsum(counts) / sample.size
    fitted = _discrete_cdf(values.astype(float), gamma, k_min)
    # both CDFs just below each observed value
    below = np.concatenate(([0.0], empirical[:-1]))
    fitted_below = _discrete_cdf(values.astype(float) - 1.0, gamma, k_min)
    return float(max(np.max(np.abs(empirical - fitted)), np.max(np.abs(below - fitted_below))))


def fit_power_law_mle(
    degrees: Iterable[int], k_min: int = 1, *, estimator: str = "exact"
) -> PowerLawFit:
    """Discrete maximum-likelihood exponent for samples ``>= k_min``.

    ``estimator="exact"`` maximizes the zeta-normalized likelihood;
    ``"approximate"`` uses ``1 + n / sum(ln(k / (k_min - 1/2)))``, which is
    biased for small ``k_min``. Estimates at or below 1, or a likelihood
    without an interior maximum (every sample equal to ``k_min``), raise
    :class:`InvalidExponent`. Goodness is the KS distance to the fitted CDF.
    """
    if k_min < 1:
        raise ValueError("k_min must be at least 1")
    sample = np.array([k for k in degrees if k >= k_min], dtype=float)
    if sample.size < MIN_MLE_SAMPLES:
        raise InsufficientSupport(
            f"need {MIN_MLE_SAMPLES} samples at k >= {k_min}, found {sample.size}"
        )

    log_sum = float(np.sum(np.log(sample / (k_min - 0.5))))
    closed_form = 1.0 + sample.size / log_sum
    if np.all(sample == k_min):
        raise InvalidExponent(math.inf, "is unbounded: every sample equals k_min")

    if estimator == "approximate":
        gamma = closed_form
    elif estimator == "exact":
        total_log = float(np.sum(np.log(sample)))

        def neg_log_likelihood(a: float) -> float:
            return a * total_log + sample.size * math.log(zeta(a, k_min))

        res = optimize.minimize_scalar(
            neg_log_likelihood, bounds=GAMMA_BOUNDS, method="bounded", options={"xatol": 1e-10}
        )
        gamma = float(res.x)
        if gamma >= GAMMA_BOUNDS[1] - 1e-3:
            raise InvalidExponent(gamma, "hit the upper search bound")
    else:
        raise ValueError(f"unknown estimator {estimator!r}")

    if gamma <= 1.0 + 1e-5:
        raise InvalidExponent(gamma)
    return PowerLawFit(
        gamma=gamma,
        method=MLE_METHOD,
        k_min=int(k_min),
        goodness=_ks_distance(sample, gamma, int(k_min)),
        support=int(sample.size),
        estimator=estimator,
    )


def fit_table(
    dist: DegreeDistribution | Mapping[float, float],
    fit: PowerLawFit,
    *,
    log: bool = False,
) -> list[tuple[float, float, float]]:
    """``(k, p_k, fitted)`` rows over the fitted support.

    The fitted curve is anchored so it equals the empirical frequency at the
    smallest fitted ``k``. ``log=True`` returns base-10 logarithms.
    """
    freqs = dist.normalized if isinstance(dist, DegreeDistribution) else dist
    ks, ps = _points(freqs, fit.k_min)
    if len(ks) == 0:
        return []
    scale = ps[0] * ks[0] ** fit.gamma
    fitted = scale * ks ** (-fit.gamma)
    if log:
        return [
            (float(a), float(b), float(c))
            for a, b, c in zip(np.log10(ks), np.log10(ps), np.log10(fitted))
        ]
    return [(float(a), float(b), float(c)) for a, b, c in zip(ks, ps, fitted)]


def sample_discrete_power_law(
    gamma: float, k_min: int, size: int, seed: int, *, table_max: int = 1_000_000
) -> np.ndarray:
    """Inverse-CDF draws from ``P(k) ~ k**-gamma`` for ``k >= k_min``.

    The CDF is tabulated exactly up to ``table_max``; the remaining tail mass
    is drawn from the continuous approximation.
    """
    if gamma <= 1:
        raise ValueError("gamma must exceed 1")
    rng = np.random.default_rng(seed)
    ks = np.arange(k_min, table_max + 1, dtype=float)
    cdf = _discrete_cdf(ks, gamma, k_min)
    u = rng.random(size)
    idx = np.searchsorted(cdf, u, side="left")
    out = np.empty(size, dtype=np.int64)
    inside = idx < ks.size
    out[inside] = ks[idx[inside]].astype(np.int64)
    if not np.all(inside):
        tail_u = u[~inside]
        tail = (k_min - 0.5) * (1.0 - tail_u) ** (-1.0 / (gamma - 1.0)) + 0.5
        out[~inside] = np.maximum(np.floor(tail), table_max + 1).astype(np.int64)
    return out
