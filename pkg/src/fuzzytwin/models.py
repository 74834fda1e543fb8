"""Model registry and a small scikit-learn style estimator."""

from __future__ import annotations

from dataclasses import replace

import numpy as np

from .dataset import Dataset
from .kernel import LINEAR, KernelSpec
from .membership import DEFAULT_DELTA, IfmaParams, ifma_weights, pfma_weights
from .solver import (
    SolverParams,
    TwinModel,
    fit_elstsvm,
    fit_lstsvm,
    fit_relstsvm,
    fit_weighted,
)

__all__ = ["MODEL_IDS", "ENERGY_MODELS", "REGULARIZED_MODELS", "train", "TwinSVMClassifier"]

MODEL_IDS = ("lstsvm", "elstsvm", "relstsvm", "if_relstsvm", "f_relstsvm")
ENERGY_MODELS = ("elstsvm", "relstsvm", "if_relstsvm", "f_relstsvm")
REGULARIZED_MODELS = ("relstsvm", "if_relstsvm", "f_relstsvm")

SOLVER_TAG = {
    "lstsvm": "lstsvm",
    "elstsvm": "elstsvm",
    "relstsvm": "relstsvm",
    "if_relstsvm": "weighted_relstsvm",
    "f_relstsvm": "weighted_relstsvm",
}


def train(model_id, data: Dataset, params: SolverParams = SolverParams(),
          spec: KernelSpec = LINEAR, ifma: IfmaParams = IfmaParams(),
          pfma_delta=DEFAULT_DELTA, pfma_per_class=False, pfma_inner=None,
          trace=None) -> TwinModel:
    """Fit `model_id` on `data`.

    The F-RELSTSVM membership planes reuse `params` and `spec` unless
    `pfma_inner` is given.
    """
    if model_id not in MODEL_IDS:
        raise ValueError(f"unknown model {model_id!r}; choose from {MODEL_IDS}")
    params = replace(params, model=SOLVER_TAG[model_id])
    A, B = data.A, data.B
    if model_id == "lstsvm":
        return fit_lstsvm(A, B, params, spec, trace=trace)
    if model_id == "elstsvm":
        return fit_elstsvm(A, B, params, spec, trace=trace)
    if model_id == "relstsvm":
        return fit_relstsvm(A, B, params, spec, trace=trace)
    if model_id == "if_relstsvm":
        w = ifma_weights(data, spec, ifma)
    else:
        inner = pfma_inner or replace(params, model="elstsvm")
        w = pfma_weights(data, spec, inner, pfma_delta, pfma_per_class)
    return fit_weighted(A, B, w.s1, w.s2, params, spec, trace=trace)


class TwinSVMClassifier:
    """Estimator wrapper with ``fit``/``predict``.

    Labels may be any two values; the more frequent one is mapped to +1.
    """

    def __init__(self, model="f_relstsvm", kernel="linear", sigma=1.0, c1=1.0, c2=1.0,
                 c3=1.0, c4=1.0, e1=1.0, e2=1.0, delta=DEFAULT_DELTA, gamma=None):
        self.model = model
        self.kernel = kernel
        self.sigma = sigma
        self.c1, self.c2, self.c3, self.c4 = c1, c2, c3, c4
        self.e1, self.e2 = e1, e2
        self.delta = delta
        self.gamma = gamma

    def fit(self, X, y):
        y = np.asarray(y).ravel()
        classes, counts = np.unique(y, return_counts=True)
        if classes.size != 2:
            raise ValueError("TwinSVMClassifier needs exactly two classes")
        pos = classes[np.argmax(counts)] if counts[0] != counts[1] else classes[1]
        self.classes_ = np.array([pos, classes[classes != pos][0]])
        data = Dataset(X, np.where(y == pos, 1, -1))
        params = SolverParams(self.c1, self.c2, self.c3, self.c4, self.e1, self.e2)
        spec = KernelSpec(self.kernel, self.sigma)
        self.model_ = train(self.model, data, params, spec,
                            ifma=IfmaParams(self.delta, self.gamma), pfma_delta=self.delta)
        return self

    def predict(self, X):
        labels = self.model_.predict(X)
        return np.where(labels == 1, self.classes_[0], self.classes_[1])

    def score(self, X, y):
        from .evaluation import auc
        y = np.asarray(y).ravel()
        truth = np.where(y == self.classes_[0], 1, -1)
        return auc(truth, self.model_.predict(X))
