"""Dense SPD solves and Sherman-Morrison-Woodbury reductions.

The twin solvers all reduce to systems of the form

    (c_1 T_1^T T_1 + c_2 T_2^T T_2 + r I) x = rhs

where the ``T_i`` are short-and-wide when a kernel is used.  Woodbury lets
us factor only ``t_i x t_i`` capacitance matrices instead of the full
``d x d`` system; the identity is exact, so both paths agree to rounding.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import lapack

from .exceptions import ContractError, NumericalError, ShapeError

__all__ = [
    "SMW_THRESHOLD",
    "SpdFactor",
    "spd_solve",
    "smw_solve",
    "gram_system",
    "solve_gram_system",
]

# SMW is used only when every reduced size is below this fraction of d
SMW_THRESHOLD = 0.8


class SpdFactor:
    """Upper Cholesky factor of a symmetric positive definite matrix."""

    def __init__(self, matrix, symmetry_rtol=1e-10):
        M = np.asarray(matrix, dtype=float)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise ShapeError(f"expected a square matrix, got shape {M.shape}")
        scale = np.max(np.abs(M)) if M.size else 0.0
        if scale > 0 and np.max(np.abs(M - M.T)) > symmetry_rtol * scale:
            raise ContractError("matrix is not symmetric")
        factor, info = lapack.dpotrf(M, lower=False, clean=True)
        if info > 0:
            raise NumericalError(
                f"Cholesky failed: leading minor of order {info} is not positive definite"
            )
        if info < 0:
            raise NumericalError(f"dpotrf rejected argument {-info}")
        self.matrix = M
        self.factor = factor
        self.dim = M.shape[0]

    def solve(self, rhs):
        x, info = lapack.dpotrs(self.factor, rhs, lower=False)
        if info != 0:
            raise NumericalError(f"dpotrs failed with info={info}")
        return x


def spd_solve(matrix, rhs, rtol=1e-8, refine=True):
    """Solve ``M x = rhs`` for symmetric positive definite ``M``.

    One step of iterative refinement is applied; if the relative residual
    still exceeds `rtol` a `NumericalError` is raised rather than
    returning an inaccurate answer.  Pass ``rtol=None`` to skip the check.
    """
    fac = SpdFactor(matrix)
    b = np.asarray(rhs, dtype=float)
    if b.shape[0] != fac.dim:
        raise ShapeError(f"rhs has {b.shape[0]} rows, matrix is {fac.dim}x{fac.dim}")
    x = fac.solve(b)
    if refine or rtol is not None:
        r = b - fac.matrix @ x
        if refine:
            x = x + fac.solve(r)
            r = b - fac.matrix @ x
        if rtol is not None:
            bnorm = np.linalg.norm(b)
            rnorm = np.linalg.norm(r)
            if rnorm > rtol * max(bnorm, np.finfo(float).tiny):
                raise NumericalError(
                    f"residual {rnorm:.3e} exceeds {rtol:g} * ||rhs|| = {rtol * bnorm:.3e}"
                    " (system too ill-conditioned)"
                )
    return x


def _check_blocks(blocks, ridge, allow_zero=False):
    if not (ridge > 0 or (allow_zero and ridge == 0)):
        raise ContractError("ridge must be strictly positive")
    d = None
    out = []
    for coeff, T in blocks:
        T = np.atleast_2d(np.asarray(T, dtype=float))
        if not coeff > 0:
            raise ContractError("block coefficients must be strictly positive")
        if d is None:
            d = T.shape[1]
        elif T.shape[1] != d:
            raise ShapeError("all blocks need the same column count")
        out.append((float(coeff), T))
    return out, d


def gram_system(blocks, ridge):
    """Explicit ``sum_i c_i T_i^T T_i + ridge I``."""
    blocks, d = _check_blocks(blocks, ridge)
    M = ridge * np.eye(d)
    for coeff, T in blocks:
        M += coeff * (T.T @ T)
    return 0.5 * (M + M.T)


def _woodbury_solve(blocks, ridge, rhs, trace):
    # M_0 = ridge I; M_l = M_{l-1} + c_l T_l^T T_l, inverted level by level.
    levels = []

    def apply_inv(level, V):
        if level == 0:
            return V / ridge
        T, U, fac = levels[level - 1]
        W = apply_inv(level - 1, V)
        return W - U @ fac.solve(T @ W)

    for coeff, T in blocks:
        U = apply_inv(len(levels), T.T)
        S = np.eye(T.shape[0]) / coeff + T @ U
        fac = SpdFactor(0.5 * (S + S.T))
        if trace is not None:
            trace.append(T.shape[0])
        levels.append((T, U, fac))
    return apply_inv(len(levels), rhs)


def smw_solve(diag_coeff, tall, ridge, rhs, trace=None):
    """Solve ``(diag_coeff * T^T T + ridge I) x = rhs``.

    With ``T`` of shape ``(t, d)`` only a ``t x t`` system is factored when
    ``t < 0.8 d``; otherwise the ``d x d`` system is solved directly.
    """
    return solve_gram_system([(diag_coeff, tall)], ridge, rhs, trace=trace)


def _shifted_solve(M, shift, rhs, rtol, max_iter=20):
    """Solve ``M x = rhs`` for a possibly singular PSD ``M``.

    ``M + shift I`` is factored and the answer refined against ``M``
    itself.  If that does not reach `rtol`, the plain solution of the
    shifted system is returned instead.
    """
    shifted = M + shift * np.eye(M.shape[0])
    fac = SpdFactor(shifted)
    x0 = fac.solve(rhs)
    x0 = x0 + fac.solve(rhs - shifted @ x0)
    bnorm = max(np.linalg.norm(rhs), np.finfo(float).tiny)
    x, rnorm = x0, np.linalg.norm(rhs - M @ x0)
    for _ in range(max_iter):
        if rnorm <= 1e-15 * bnorm:
            break
        x_new = x + fac.solve(rhs - M @ x)
        r_new = np.linalg.norm(rhs - M @ x_new)
        if not r_new < rnorm:
            break
        x, rnorm = x_new, r_new
    if rtol is None or rnorm <= rtol * bnorm:
        return x
    r0 = np.linalg.norm(rhs - shifted @ x0)
    if r0 > rtol * bnorm:
        raise NumericalError(
            f"residual {r0:.3e} exceeds {rtol:g} * ||rhs|| (system too ill-conditioned)"
        )
    return x0


def solve_gram_system(blocks, ridge, rhs, trace=None, rtol=1e-8, smw=True, shift=0.0):
    """Solve ``(sum_i c_i T_i^T T_i + ridge I) x = rhs``.

    `blocks` is a sequence of ``(c_i, T_i)``.  Woodbury is applied block by
    block in the given order when every ``t_i < 0.8 d``.  If `trace` is a
    list, the size of every factored matrix is appended to it.

    A positive `shift` is a stabiliser for singular systems (``ridge`` may
    then be 0): it is added before factorising, the answer is refined
    against the unshifted matrix, and the direct path is always used.
    """
    if shift < 0:
        raise ContractError("shift must be non-negative")
    blocks, d = _check_blocks(blocks, ridge, allow_zero=shift > 0)
    rhs = np.asarray(rhs, dtype=float)
    if rhs.shape[0] != d:
        raise ShapeError(f"rhs has {rhs.shape[0]} rows, system is {d}x{d}")
    if smw and shift == 0 and all(T.shape[0] < SMW_THRESHOLD * d for _, T in blocks):
        return _woodbury_solve(blocks, ridge, rhs, trace)
    if trace is not None:
        trace.append(d)
    M = ridge * np.eye(d)
    for coeff, T in blocks:
        M += coeff * (T.T @ T)
    M = 0.5 * (M + M.T)
    if shift > 0:
        return _shifted_solve(M, shift, rhs, rtol)
    return spd_solve(M, rhs, rtol=rtol)
