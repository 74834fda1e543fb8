"""Fuzzy slack weights for the weighted twin model.

Two schemes are provided:

* IFMA (intuitionistic fuzzy): membership from the kernel-space distance
  to the class centre, non-membership from the fraction of
  opposite-class points in a gamma-neighbourhood, fused into one score.
* PFMA (projection based): distance of each point to its own class's
  proximal plane (fitted with ELS-TSVM), min-max normalised and mapped
  through ``exp(-t)`` so every score lies in ``[1/e, 1]``.

Both scores are then multiplied by the imbalance ratio on the minority
class.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .dataset import Dataset, class_stats
from .exceptions import ContractError, ShapeError
from .kernel import LINEAR, KernelSpec, feature_distances, gram
from .solver import SolverParams, fit_elstsvm

__all__ = [
    "IfNumbers",
    "FuzzyWeights",
    "IfmaParams",
    "center_distances",
    "ifma_membership",
    "ifma_nonmembership",
    "ifma_score",
    "ifma_weights",
    "pfma_distances",
    "pfma_scores",
    "pfma_weights",
    "weights_from_scores",
    "default_gamma",
    "dump_memberships",
]

DEFAULT_DELTA = 1e-4


@dataclass(frozen=True)
class IfNumbers:
    """Membership ``mu`` and non-membership ``nu`` of every sample."""

    mu: np.ndarray
    nu: np.ndarray

    def __post_init__(self):
        mu = np.asarray(self.mu, dtype=float)
        nu = np.asarray(self.nu, dtype=float)
        if mu.shape != nu.shape:
            raise ShapeError("mu and nu must have the same length")
        tol = 1e-12
        if (np.any(mu < -tol) or np.any(mu > 1 + tol) or np.any(nu < -tol)
                or np.any(nu > 1 + tol) or np.any(mu + nu > 1 + tol)):
            raise ContractError("need 0 <= mu, nu and mu + nu <= 1")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)


@dataclass(frozen=True)
class FuzzyWeights:
    """Slack weights for class A (`s1`) and class B (`s2`)."""

    s1: np.ndarray
    s2: np.ndarray
    scheme: str

    def __post_init__(self):
        if self.scheme not in ("ifma", "pfma", "none"):
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if np.any(self.s1 < 0) or np.any(self.s2 < 0):
            raise ContractError("weights must be non-negative")


@dataclass(frozen=True)
class IfmaParams:
    """`delta` cushions the class radius; `gamma` is the neighbourhood radius.

    ``gamma=None`` means the median pairwise kernel-space distance.
    """

    delta: float = DEFAULT_DELTA
    gamma: float | None = None

    def __post_init__(self):
        if not self.delta > 0:
            raise ContractError("delta must be > 0")
        if self.gamma is not None and not self.gamma > 0:
            raise ContractError("gamma must be > 0")


def center_distances(d: Dataset, spec: KernelSpec = LINEAR) -> np.ndarray:
    """``||phi(x_i) - C^{y_i}||`` via the kernel trick.

    ``||phi(x) - C||^2 = K(x, x) - 2/l sum_j K(x, x_j) + 1/l^2 sum_jk K(x_j, x_k)``
    with the sums over the ``l`` members of the sample's class.
    """
    class_stats(d)
    dist = np.empty(d.n_samples)
    for label in (1, -1):
        idx = np.flatnonzero(d.labels == label)
        Xc = d.features[idx]
        K = gram(Xc, Xc, spec)
        sq = np.diag(K) - 2.0 * K.mean(axis=1) + K.mean()
        dist[idx] = np.sqrt(np.maximum(sq, 0.0))
    return dist


def ifma_membership(d: Dataset, spec: KernelSpec = LINEAR, delta=DEFAULT_DELTA) -> np.ndarray:
    """``mu_i = 1 - ||phi(x_i) - C^{y_i}|| / (r^{y_i} + delta)``, in ``(0, 1]``."""
    if not delta > 0:
        raise ContractError("delta must be > 0")
    dist = center_distances(d, spec)
    mu = np.empty_like(dist)
    for label in (1, -1):
        mask = d.labels == label
        radius = dist[mask].max()
        mu[mask] = 1.0 - dist[mask] / (radius + delta)
    return mu


def default_gamma(d: Dataset, spec: KernelSpec = LINEAR) -> float:
    D = feature_distances(d.features, spec)
    iu = np.triu_indices(d.n_samples, k=1)
    g = float(np.median(D[iu])) if iu[0].size else 1.0
    return g if g > 0 else 1.0


def ifma_nonmembership(d: Dataset, spec: KernelSpec = LINEAR, gamma=None, mu=None) -> np.ndarray:
    """``nu_i = (1 - mu_i) * rho_i``.

    ``rho_i`` is the share of opposite-class points among all points within
    kernel-space distance `gamma` of ``x_i`` (``x_i`` itself included).
    """
    if mu is None:
        mu = ifma_membership(d, spec)
    mu = np.asarray(mu, dtype=float)
    if mu.shape[0] != d.n_samples:
        raise ShapeError("mu must have one entry per sample")
    if gamma is None:
        gamma = default_gamma(d, spec)
    if not gamma > 0:
        raise ContractError("gamma must be > 0")
    near = feature_distances(d.features, spec) <= gamma
    np.fill_diagonal(near, True)
    hetero = d.labels[:, None] != d.labels[None, :]
    rho = (near & hetero).sum(axis=1) / near.sum(axis=1)
    return (1.0 - mu) * rho


def ifma_score(numbers: IfNumbers) -> np.ndarray:
    """Score ``k``: ``mu`` if ``nu = 0``, 0 if ``mu <= nu``, else
    ``(1 - nu) / (2 - mu - nu)``."""
    mu, nu = numbers.mu, numbers.nu
    with np.errstate(divide="ignore", invalid="ignore"):
        mixed = (1.0 - nu) / (2.0 - mu - nu)
    return np.where(nu == 0, mu, np.where(mu <= nu, 0.0, mixed))


def weights_from_scores(scores, d: Dataset, scheme="ifma") -> FuzzyWeights:
    """Multiply minority-class scores by the imbalance ratio and split by class."""
    scores = np.asarray(scores, dtype=float)
    if scores.shape[0] != d.n_samples:
        raise ShapeError("one score per sample is required")
    stats = class_stats(d)
    S = np.where(d.labels == stats.majority_label, scores, stats.ir * scores)
    return FuzzyWeights(s1=S[d.labels == 1], s2=S[d.labels == -1], scheme=scheme)


def ifma_weights(d: Dataset, spec: KernelSpec = LINEAR, params: IfmaParams = IfmaParams()):
    mu = ifma_membership(d, spec, params.delta)
    nu = ifma_nonmembership(d, spec, params.gamma, mu)
    return weights_from_scores(ifma_score(IfNumbers(mu, nu)), d, "ifma")


def pfma_distances(d: Dataset, spec: KernelSpec = LINEAR, inner: SolverParams = SolverParams(),
                   delta=DEFAULT_DELTA) -> np.ndarray:
    """Distance of each sample to its own class's ELS-TSVM proximal plane."""
    if not delta > 0:
        raise ContractError("delta must be > 0")
    class_stats(d)
    planes = fit_elstsvm(d.A, d.B, inner, spec, ridge=delta)
    d1, d2 = planes.plane_distances(d.features)
    return np.where(d.labels == 1, d1, d2)


def _normalised_exp(dist):
    lo, hi = dist.min(), dist.max()
    if not hi > lo:
        return np.ones_like(dist)
    return np.exp(-(dist - lo) / (hi - lo))


def pfma_scores(d: Dataset, spec: KernelSpec = LINEAR, inner: SolverParams = SolverParams(),
                delta=DEFAULT_DELTA, per_class=False) -> np.ndarray:
    """``h_i = exp(-(d_i - d_min) / (d_max - d_min))``.

    The extremes are taken over all training points, or within each class
    when `per_class` is set.  If every distance is equal all scores are 1.
    """
    dist = pfma_distances(d, spec, inner, delta)
    if not per_class:
        return _normalised_exp(dist)
    h = np.empty_like(dist)
    for label in (1, -1):
        mask = d.labels == label
        h[mask] = _normalised_exp(dist[mask])
    return h


def pfma_weights(d: Dataset, spec: KernelSpec = LINEAR, inner: SolverParams = SolverParams(),
                 delta=DEFAULT_DELTA, per_class=False) -> FuzzyWeights:
    return weights_from_scores(pfma_scores(d, spec, inner, delta, per_class), d, "pfma")


def dump_memberships(path, d: Dataset, spec: KernelSpec = LINEAR, scheme="ifma", **kwargs):
    """Write per-sample membership diagnostics as CSV for inspection."""
    stats = class_stats(d)
    factor = np.where(d.labels == stats.majority_label, 1.0, stats.ir)
    if scheme == "ifma":
        params = kwargs.get("params", IfmaParams())
        mu = ifma_membership(d, spec, params.delta)
        nu = ifma_nonmembership(d, spec, params.gamma, mu)
        k = ifma_score(IfNumbers(mu, nu))
        header = ["index", "label", "mu", "nu", "score", "weight"]
        cols = [mu, nu, k, factor * k]
    elif scheme == "pfma":
        inner = kwargs.get("inner", SolverParams())
        delta = kwargs.get("delta", DEFAULT_DELTA)
        dist = pfma_distances(d, spec, inner, delta)
        h = pfma_scores(d, spec, inner, delta, kwargs.get("per_class", False))
        header = ["index", "label", "d_hyp", "score", "weight"]
        cols = [dist, h, factor * h]
    else:
        raise ValueError(f"unknown scheme {scheme!r}")
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for i in range(d.n_samples):
            w.writerow([i, int(d.labels[i])] + [f"{c[i]:.6g}" for c in cols])
