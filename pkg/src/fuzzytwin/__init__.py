"""Least-squares twin SVMs with energy margins, Tikhonov terms and fuzzy weights."""

from .dataset import (
    ClassStats,
    Dataset,
    class_stats,
    generate_crossplane,
    load_csv,
    load_keel,
    minmax_scale,
    save_csv,
    stratified_kfold,
    stratified_split,
)
from .evaluation import (
    Grids,
    auc,
    friedman,
    grid_search_cv,
    nemenyi_cd,
    nemenyi_q,
    rank_table,
    significant_pairs,
)
from .exceptions import (
    ContractError,
    DegenerateDatasetError,
    FormatError,
    FuzzyTwinError,
    NumericalError,
    ParseError,
    ShapeError,
    StratificationError,
    UndefinedMetricError,
    UnsupportedDatasetError,
)
from .kernel import LINEAR, KernelSpec, gram
from .membership import IfmaParams, ifma_weights, pfma_weights
from .models import MODEL_IDS, TwinSVMClassifier, train
from .solver import (
    SolverParams,
    TwinModel,
    fit_elstsvm,
    fit_lstsvm,
    fit_relstsvm,
    fit_weighted,
    load_model,
    save_model,
)

__version__ = "0.1.0"
