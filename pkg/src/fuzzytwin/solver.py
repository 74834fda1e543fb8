"""Closed-form training of the least-squares twin SVM family.

Every plane is the minimiser of a strictly convex quadratic, so training
is one symmetric linear solve per plane.  With ``z = [w; b]``,
``G = [A e]`` and ``H = [B e]`` (or their kernel counterparts
``[K(A, C^T) e]`` and ``[K(B, C^T) e]``), the objectives are

plane 1::

    1/2 ||G z||^2 + c1/2 ||S2 (H z + E2)||^2 + c3/2 ||z||^2

plane 2::

    1/2 ||H z||^2 + c2/2 ||S1 (E1 - G z)||^2 + c4/2 ||z||^2

LSTSVM fixes ``E = 1`` and ``c3 = c4 = 0``; ELS-TSVM frees the energies;
RELS-TSVM adds the Tikhonov terms; the weighted model adds the diagonal
fuzzy weights ``S1``, ``S2``.  Without a Tikhonov term the system may be
singular, so a ridge of ``1e-10 * trace(M) / dim`` is added before
factorising and the solution is then refined against the exact system.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .exceptions import ContractError, ShapeError
from .kernel import LINEAR, KernelSpec, gram
from .numerics import solve_gram_system

__all__ = [
    "SolverParams",
    "TwinModel",
    "augmented_blocks",
    "fit_lstsvm",
    "fit_elstsvm",
    "fit_relstsvm",
    "fit_weighted",
    "predict",
    "save_model",
    "load_model",
]

SINGULAR_RIDGE = 1e-10

_MODELS = ("lstsvm", "elstsvm", "relstsvm", "weighted_relstsvm")


@dataclass(frozen=True)
class SolverParams:
    """Penalties, regularisers and energies shared by all models.

    ``c1``/``c2`` weigh the slack of plane 1/plane 2 and ``c3``/``c4`` are
    the Tikhonov terms of plane 1/plane 2.  ``e1`` is the energy target of
    the constraint on class A (used by plane 2) and ``e2`` the one on
    class B (used by plane 1).
    """

    c1: float = 1.0
    c2: float = 1.0
    c3: float = 1.0
    c4: float = 1.0
    e1: float = 1.0
    e2: float = 1.0
    model: str = "relstsvm"

    def __post_init__(self):
        for name in ("c1", "c2", "c3", "c4"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise ContractError(f"{name} must be a positive finite number, got {value}")
        for name in ("e1", "e2"):
            value = getattr(self, name)
            if not 0 < value <= 1:
                raise ContractError(f"{name} must lie in (0, 1], got {value}")
        if self.model not in _MODELS:
            raise ContractError(f"unknown model {self.model!r}")

    def as_dict(self):
        return {k: getattr(self, k) for k in ("c1", "c2", "c3", "c4", "e1", "e2")}


@dataclass(frozen=True)
class TwinModel:
    """Two trained (kernel-generated) planes and how to combine them.

    ``rule`` is ``"perpendicular"`` (nearest plane after dividing by
    ``||w_i||``) or ``"ratio"`` (+1 iff ``|f1(x)| <= |f2(x)|``).
    ``basis`` holds the training matrix ``[A; B]`` for kernel models and
    is ``None`` for linear ones.
    """

    w1: np.ndarray
    b1: float
    w2: np.ndarray
    b2: float
    spec: KernelSpec = LINEAR
    basis: np.ndarray | None = None
    rule: str = "ratio"

    def __post_init__(self):
        if self.rule not in ("perpendicular", "ratio"):
            raise ValueError(f"unknown decision rule {self.rule!r}")

    def features(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=float))
        if self.basis is None:
            if X.shape[1] != self.w1.shape[0]:
                raise ShapeError(f"expected {self.w1.shape[0]} columns, got {X.shape[1]}")
            return X
        return gram(X, self.basis, self.spec)

    def decision_values(self, X):
        """Plane values ``(f1(x), f2(x))`` for every row of `X`."""
        F = self.features(X)
        return F @ self.w1 + self.b1, F @ self.w2 + self.b2

    def plane_distances(self, X):
        """``|f_i(x)| / ||w_i||`` for both planes."""
        f1, f2 = self.decision_values(X)
        with np.errstate(divide="ignore", invalid="ignore"):
            d1 = np.abs(f1) / np.linalg.norm(self.w1)
            d2 = np.abs(f2) / np.linalg.norm(self.w2)
        return np.nan_to_num(d1, nan=np.inf), np.nan_to_num(d2, nan=np.inf)

    def predict(self, X):
        return predict(self, X)

    def to_dict(self):
        return {
            "format": "fuzzytwin.TwinModel/1",
            "kernel": {"family": self.spec.family, "sigma": self.spec.sigma},
            "rule": self.rule,
            "w1": [repr(float(v)) for v in self.w1],
            "b1": repr(float(self.b1)),
            "w2": [repr(float(v)) for v in self.w2],
            "b2": repr(float(self.b2)),
            "basis": None if self.basis is None
            else [[repr(float(v)) for v in row] for row in self.basis],
        }

    @classmethod
    def from_dict(cls, data):
        if data.get("format") != "fuzzytwin.TwinModel/1":
            raise ValueError("not a serialized TwinModel")
        vec = lambda xs: np.array([float(v) for v in xs])  # noqa: E731
        basis = data.get("basis")
        return cls(
            w1=vec(data["w1"]), b1=float(data["b1"]),
            w2=vec(data["w2"]), b2=float(data["b2"]),
            spec=KernelSpec(data["kernel"]["family"], float(data["kernel"]["sigma"])),
            basis=None if basis is None else np.array([[float(v) for v in r] for r in basis]),
            rule=data["rule"],
        )


def save_model(model: TwinModel, path):
    Path(path).write_text(json.dumps(model.to_dict(), indent=1))


def load_model(path) -> TwinModel:
    return TwinModel.from_dict(json.loads(Path(path).read_text()))


def augmented_blocks(A, B, spec: KernelSpec = LINEAR):
    """``G = [A e]``, ``H = [B e]`` and the kernel basis (``None`` if linear)."""
    A = np.atleast_2d(np.asarray(A, dtype=float))
    B = np.atleast_2d(np.asarray(B, dtype=float))
    if A.shape[0] == 0 or B.shape[0] == 0:
        raise ContractError("both classes must be non-empty")
    if A.shape[1] != B.shape[1]:
        raise ShapeError(f"A has {A.shape[1]} columns, B has {B.shape[1]}")
    if spec.is_linear:
        basis = None
        KA, KB = A, B
    else:
        basis = np.vstack([A, B])
        KA, KB = gram(A, basis, spec), gram(B, basis, spec)
    G = np.hstack([KA, np.ones((KA.shape[0], 1))])
    H = np.hstack([KB, np.ones((KB.shape[0], 1))])
    return G, H, basis


def _solve_plane(own, opposite, penalty, reg, target, weights, *, opposite_first,
                 trace, extra_ridge):
    """Minimise ``1/2||own z||^2 + penalty/2 ||S (opposite z - target)||^2 + reg/2 ||z||^2``.

    Solved in the form
    ``((1/penalty) own^T own + Q^T Q + (reg/penalty) I) z = Q^T S target``
    with ``Q = S opposite``.
    """
    Q = opposite if weights is None else weights[:, None] * opposite
    t = target if weights is None else weights * target
    rhs = Q.T @ t
    own_coeff = 1.0 / penalty
    ridge = reg / penalty + extra_ridge
    own_block, opp_block = (own_coeff, own), (1.0, Q)
    blocks = [opp_block, own_block] if opposite_first else [own_block, opp_block]
    if ridge > 0:
        return solve_gram_system(blocks, ridge, rhs, trace=trace)
    # No Tikhonov term: factor with a tiny ridge, refine against the exact system
    tr = own_coeff * np.sum(own * own) + np.sum(Q * Q)
    shift = SINGULAR_RIDGE * tr / own.shape[1] if tr > 0 else SINGULAR_RIDGE
    return solve_gram_system(blocks, 0.0, rhs, trace=trace, shift=shift)


def _fit(A, B, params, spec, *, s1=None, s2=None, rule, regularized, energies,
         trace=None, extra_ridge=0.0):
    G, H, basis = augmented_blocks(A, B, spec)
    p, q = G.shape[0], H.shape[0]
    E1 = (params.e1 if energies else 1.0) * np.ones(p)
    E2 = (params.e2 if energies else 1.0) * np.ones(q)
    c3 = params.c3 if regularized else 0.0
    c4 = params.c4 if regularized else 0.0
    # Woodbury order: with p <= q both planes fold in the opposite class
    # first, with q < p they fold in their own class first.
    opposite_first = p <= q
    t1 = [] if trace is not None else None
    t2 = [] if trace is not None else None
    z1 = -_solve_plane(G, H, params.c1, c3, E2, s2, opposite_first=opposite_first,
                       trace=t1, extra_ridge=extra_ridge)
    z2 = _solve_plane(H, G, params.c2, c4, E1, s1, opposite_first=opposite_first,
                      trace=t2, extra_ridge=extra_ridge)
    if trace is not None:
        trace.append(("plane1", tuple(t1)))
        trace.append(("plane2", tuple(t2)))
    return TwinModel(w1=z1[:-1], b1=float(z1[-1]), w2=z2[:-1], b2=float(z2[-1]),
                     spec=spec, basis=basis, rule=rule)


def fit_lstsvm(A, B, params: SolverParams, spec: KernelSpec = LINEAR, trace=None) -> TwinModel:
    """Least-squares twin SVM: unit margins, perpendicular-distance rule."""
    return _fit(A, B, params, spec, rule="perpendicular", regularized=False,
                energies=False, trace=trace)


def fit_elstsvm(A, B, params: SolverParams, spec: KernelSpec = LINEAR, trace=None,
                ridge=0.0) -> TwinModel:
    """Energy-based LSTSVM: margins ``E1``/``E2`` and the ratio rule.

    `ridge` adds ``ridge * I`` to both normal-equation matrices (in
    the scaling ``(1/c) G^T G + H^T H``) to keep them well conditioned.
    """
    if ridge < 0:
        raise ContractError("ridge must be non-negative")
    return _fit(A, B, params, spec, rule="ratio", regularized=False, energies=True,
                trace=trace, extra_ridge=ridge)


def fit_relstsvm(A, B, params: SolverParams, spec: KernelSpec = LINEAR, trace=None) -> TwinModel:
    """Regularised energy-based LSTSVM (``+c3 I`` / ``+c4 I``)."""
    return _fit(A, B, params, spec, rule="ratio", regularized=True, energies=True,
                trace=trace)


def fit_weighted(A, B, s1, s2, params: SolverParams, spec: KernelSpec = LINEAR,
                 trace=None) -> TwinModel:
    """RELS-TSVM with per-sample slack weights.

    `s1` weighs the class-A slacks in plane 2 and `s2` the class-B slacks
    in plane 1.  Weights come from IFMA (IF-RELSTSVM) or PFMA (F-RELSTSVM).
    """
    s1 = np.asarray(s1, dtype=float).ravel()
    s2 = np.asarray(s2, dtype=float).ravel()
    A = np.atleast_2d(np.asarray(A, dtype=float))
    B = np.atleast_2d(np.asarray(B, dtype=float))
    if s1.shape[0] != A.shape[0] or s2.shape[0] != B.shape[0]:
        raise ContractError("weight vectors must match the class sizes")
    if np.any(s1 < 0) or np.any(s2 < 0) or not (np.all(np.isfinite(s1)) and np.all(np.isfinite(s2))):
        raise ContractError("fuzzy weights must be finite and non-negative")
    return _fit(A, B, params, spec, s1=s1, s2=s2, rule="ratio", regularized=True,
                energies=True, trace=trace)


def predict(model: TwinModel, X) -> np.ndarray:
    """Labels in {+1, -1}; ties go to +1."""
    if model.rule == "perpendicular":
        d1, d2 = model.plane_distances(X)
        return np.where(d1 <= d2, 1, -1)
    f1, f2 = model.decision_values(X)
    return np.where(np.abs(f1) <= np.abs(f2), 1, -1)
