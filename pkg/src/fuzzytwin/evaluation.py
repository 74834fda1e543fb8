"""AUC, cross-validated grid search and rank statistics."""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy import stats as sps

from .dataset import Dataset, stratified_kfold
from .exceptions import NumericalError, UndefinedMetricError
from .kernel import KernelSpec
from .models import ENERGY_MODELS, MODEL_IDS, REGULARIZED_MODELS, SOLVER_TAG, train
from .solver import SolverParams

__all__ = [
    "Confusion",
    "confusion",
    "auc",
    "Grids",
    "DEFAULT_GRIDS",
    "parameter_combinations",
    "cross_val_auc",
    "GridSearchResult",
    "grid_search_cv",
    "RankTable",
    "rank_table",
    "FriedmanResult",
    "friedman",
    "NEMENYI_Q",
    "nemenyi_q",
    "nemenyi_cd",
    "significant_pairs",
    "worker_count",
]

WORKERS_ENV = "FUZZYTWIN_WORKERS"


@dataclass(frozen=True)
class Confusion:
    tp_rate: float
    fp_rate: float


def _check_labels(true_labels, predicted_labels):
    t = np.asarray(true_labels).ravel()
    p = np.asarray(predicted_labels).ravel()
    if t.shape != p.shape:
        raise ValueError("label vectors differ in length")
    if not (np.all(np.isin(t, (-1, 1))) and np.all(np.isin(p, (-1, 1)))):
        raise ValueError("labels must be +1 or -1")
    if not (np.any(t == 1) and np.any(t == -1)):
        raise UndefinedMetricError("AUC needs both classes in the true labels")
    return t, p


def confusion(true_labels, predicted_labels) -> Confusion:
    t, p = _check_labels(true_labels, predicted_labels)
    pos, neg = t == 1, t == -1
    return Confusion(tp_rate=float(np.mean(p[pos] == 1)),
                     fp_rate=float(np.mean(p[neg] == 1)))


def auc(true_labels, predicted_labels) -> float:
    """``(1 + TPR - FPR) / 2`` over hard labels (balanced accuracy)."""
    c = confusion(true_labels, predicted_labels)
    return (1.0 + c.tp_rate - c.fp_rate) / 2.0


@dataclass(frozen=True)
class Grids:
    """Candidate values per hyper-parameter.

    ``c`` is shared by both slack penalties (``c1 = c2``), ``c_reg`` by both
    Tikhonov terms (``c3 = c4``); ``e`` is crossed for ``e1`` and ``e2``.
    """

    sigma: tuple = tuple(2.0 ** i for i in range(-5, 6))
    c: tuple = tuple(10.0 ** i for i in range(-5, 6))
    c_reg: tuple = tuple(10.0 ** i for i in range(-5, 6))
    e: tuple = (0.6, 0.7, 0.8, 0.9, 1.0)

    def __post_init__(self):
        for name in ("sigma", "c", "c_reg", "e"):
            values = tuple(sorted(float(v) for v in getattr(self, name)))
            if not values:
                raise ValueError(f"grid {name!r} is empty")
            object.__setattr__(self, name, values)


DEFAULT_GRIDS = Grids()


def parameter_combinations(model_id, family, grids: Grids = DEFAULT_GRIDS):
    """All ``(KernelSpec, SolverParams)`` pairs, ordered by sigma, then C, then E."""
    if model_id not in MODEL_IDS:
        raise ValueError(f"unknown model {model_id!r}")
    sigmas = grids.sigma if family == "gaussian" else (1.0,)
    regs = grids.c_reg if model_id in REGULARIZED_MODELS else (1.0,)
    energies = grids.e if model_id in ENERGY_MODELS else (1.0,)
    combos = []
    for sigma in sigmas:
        spec = KernelSpec(family, sigma)
        for c, c_reg in itertools.product(grids.c, regs):
            for e1, e2 in itertools.product(energies, energies):
                combos.append((spec, SolverParams(c1=c, c2=c, c3=c_reg, c4=c_reg,
                                                  e1=e1, e2=e2, model=SOLVER_TAG[model_id])))
    return combos


def worker_count(workers=None):
    if workers is not None:
        return max(1, int(workers))
    return max(1, int(os.environ.get(WORKERS_ENV, "1")))


def cross_val_auc(d: Dataset, model_id, params: SolverParams, spec: KernelSpec,
                  folds, **train_kwargs):
    """Per-fold validation AUCs for one configuration."""
    scores = []
    for f in range(int(folds.max()) + 1):
        val = folds == f
        model = train(model_id, d.subset(~val), params, spec, **train_kwargs)
        scores.append(auc(d.labels[val], model.predict(d.features[val])))
    return np.array(scores)


@dataclass(frozen=True)
class GridSearchResult:
    params: SolverParams
    spec: KernelSpec
    score: float
    fold_scores: np.ndarray = field(repr=False)
    n_combinations: int = 0
    n_failed: int = 0


def grid_search_cv(d: Dataset, model_id, grids: Grids = DEFAULT_GRIDS, k=5, seed=0,
                   family="linear", workers=None, **train_kwargs) -> GridSearchResult:
    """Pick the combination with the highest mean k-fold validation AUC.

    Ties keep the first combination in grid order.  Combinations whose
    solve is numerically unusable are skipped; if all fail the last error
    is raised.
    """
    folds = stratified_kfold(d, k, seed)
    combos = parameter_combinations(model_id, family, grids)

    def evaluate(combo):
        spec, params = combo
        try:
            return cross_val_auc(d, model_id, params, spec, folds, **train_kwargs), None
        except NumericalError as exc:
            return None, exc

    n = worker_count(workers)
    if n == 1:
        results = [evaluate(c) for c in combos]
    else:
        with ThreadPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(evaluate, combos))

    best, best_score, failed, last_error = None, -math.inf, 0, None
    for i, (scores, err) in enumerate(results):
        if scores is None:
            failed += 1
            last_error = err
            continue
        mean = float(np.mean(scores))
        if mean > best_score:
            best, best_score = i, mean
    if best is None:
        raise last_error
    spec, params = combos[best]
    return GridSearchResult(params=params, spec=spec, score=best_score,
                            fold_scores=results[best][0], n_combinations=len(combos),
                            n_failed=failed)


@dataclass(frozen=True)
class RankTable:
    """Scores (N datasets x k algorithms), their ranks and column means."""

    scores: np.ndarray
    ranks: np.ndarray
    avg_ranks: np.ndarray
    datasets: tuple = ()
    algorithms: tuple = ()

    @property
    def n_datasets(self):
        return self.ranks.shape[0]

    @property
    def n_algorithms(self):
        return self.ranks.shape[1]

    @classmethod
    def from_ranks(cls, ranks, datasets=(), algorithms=()):
        """Wrap an already ranked matrix (e.g. a published rank table)."""
        R = np.asarray(ranks, dtype=float)
        if R.ndim != 2 or R.shape[1] < 2:
            raise ValueError("need an N x k matrix with k >= 2")
        k = R.shape[1]
        if not np.allclose(R.sum(axis=1), k * (k + 1) / 2):
            raise ValueError("every rank row must sum to k(k+1)/2")
        return cls(scores=np.full_like(R, np.nan), ranks=R, avg_ranks=R.mean(axis=0),
                   datasets=tuple(datasets), algorithms=tuple(algorithms))


def rank_table(scores, datasets=(), algorithms=()) -> RankTable:
    """Rank each row (1 = highest score); exact ties share the mean rank."""
    S = np.asarray(scores, dtype=float)
    if S.ndim != 2 or S.shape[0] < 1 or S.shape[1] < 2:
        raise ValueError("scores must be an N x k matrix with N >= 1, k >= 2")
    if not np.all(np.isfinite(S)):
        raise ValueError("scores must be finite")
    R = np.vstack([sps.rankdata(-row, method="average") for row in S])
    return RankTable(scores=S, ranks=R, avg_ranks=R.mean(axis=0),
                     datasets=tuple(datasets), algorithms=tuple(algorithms))


@dataclass(frozen=True)
class FriedmanResult:
    chi2: float
    ff: float
    dof1: int
    dof2: int

    @property
    def chi2_pvalue(self):
        return float(sps.chi2.sf(self.chi2, self.dof1))

    @property
    def ff_pvalue(self):
        return 0.0 if math.isinf(self.ff) else float(sps.f.sf(self.ff, self.dof1, self.dof2))

    def ff_critical(self, alpha=0.05):
        return float(sps.f.isf(alpha, self.dof1, self.dof2))


def friedman(rt: RankTable) -> FriedmanResult:
    """Friedman chi-square and the Iman-Davenport F statistic from average ranks."""
    N, k = rt.ranks.shape
    R = rt.ranks.mean(axis=0)
    chi2 = 12.0 * N / (k * (k + 1)) * (np.sum(R ** 2) - k * (k + 1) ** 2 / 4.0)
    chi2 = max(float(chi2), 0.0)
    denom = N * (k - 1) - chi2
    ff = math.inf if denom <= 0 else (N - 1) * chi2 / denom
    return FriedmanResult(chi2=chi2, ff=ff, dof1=k - 1, dof2=(k - 1) * (N - 1))


# Two-tailed Nemenyi critical values q_alpha (studentized range / sqrt 2)
NEMENYI_Q = {
    0.05: {2: 1.960, 3: 2.343, 4: 2.569, 5: 2.728, 6: 2.850, 7: 2.949, 8: 3.031,
           9: 3.102, 10: 3.164},
    0.10: {2: 1.645, 3: 2.052, 4: 2.291, 5: 2.459, 6: 2.589, 7: 2.693, 8: 2.780,
           9: 2.855, 10: 2.920},
}


def nemenyi_q(k, alpha=0.10):
    """Tabulated ``q_alpha`` for ``k`` algorithms.

    Values outside the table come from the studentized range distribution
    with infinite degrees of freedom.
    """
    if alpha in NEMENYI_Q and k in NEMENYI_Q[alpha]:
        return NEMENYI_Q[alpha][k]
    if k < 2 or not 0 < alpha < 1:
        raise ValueError(f"need k >= 2 and alpha in (0, 1), got k={k}, alpha={alpha}")
    return float(sps.studentized_range.ppf(1.0 - alpha, k, math.inf) / math.sqrt(2.0))


def nemenyi_cd(k, n_datasets, q_alpha) -> float:
    """Critical difference ``q_alpha * sqrt(k (k + 1) / (6 N))``."""
    if k < 2 or n_datasets < 1 or not q_alpha > 0:
        raise ValueError("need k >= 2, N >= 1 and q_alpha > 0")
    return q_alpha * math.sqrt(k * (k + 1) / (6.0 * n_datasets))


def significant_pairs(avg_ranks, cd):
    """``(i, j, gap, significant)`` for every algorithm pair ``i < j``."""
    out = []
    for i, j in itertools.combinations(range(len(avg_ranks)), 2):
        gap = abs(float(avg_ranks[i]) - float(avg_ranks[j]))
        out.append((i, j, gap, gap > cd))
    return out
