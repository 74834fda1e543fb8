"""Linear and Gaussian kernels."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ShapeError

__all__ = ["KernelSpec", "LINEAR", "gram", "feature_distances"]


@dataclass(frozen=True)
class KernelSpec:
    """Kernel family plus the Gaussian width.

    The Gaussian kernel is ``exp(-||x - c||^2 / (2 * sigma))``; note the
    width enters linearly, not squared.
    """

    family: str = "linear"
    sigma: float = 1.0

    def __post_init__(self):
        if self.family not in ("linear", "gaussian"):
            raise ValueError(f"unknown kernel family {self.family!r}")
        if self.family == "gaussian" and not self.sigma > 0:
            raise ValueError("gaussian kernel requires sigma > 0")

    @property
    def is_linear(self):
        return self.family == "linear"

    def __str__(self):
        return "linear" if self.is_linear else f"gaussian(sigma={self.sigma:g})"


LINEAR = KernelSpec("linear")


def _sq_distances(X, C):
    sq = (np.einsum("ij,ij->i", X, X)[:, None]
          + np.einsum("ij,ij->i", C, C)[None, :]
          - 2.0 * X @ C.T)
    np.maximum(sq, 0.0, out=sq)
    return sq


def gram(X, C, spec: KernelSpec = LINEAR) -> np.ndarray:
    """Kernel block ``K(X, C^T)`` of shape ``(len(X), len(C))``."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    C = np.atleast_2d(np.asarray(C, dtype=float))
    if X.shape[1] != C.shape[1]:
        raise ShapeError(f"column mismatch: {X.shape[1]} vs {C.shape[1]}")
    same = X is C
    if spec.is_linear:
        K = X @ C.T
    else:
        K = np.exp(-_sq_distances(X, C) / (2.0 * spec.sigma))
        if same:
            np.fill_diagonal(K, 1.0)
    if same:
        K = 0.5 * (K + K.T)
    return K


def feature_distances(X, spec: KernelSpec = LINEAR) -> np.ndarray:
    """Pairwise distances ``||phi(x_i) - phi(x_j)||`` in the kernel's feature space."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    K = gram(X, X, spec)
    diag = np.diag(K)
    sq = diag[:, None] + diag[None, :] - 2.0 * K
    np.maximum(sq, 0.0, out=sq)
    np.fill_diagonal(sq, 0.0)
    return np.sqrt(sq)
