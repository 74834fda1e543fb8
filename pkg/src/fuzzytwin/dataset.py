"""Binary datasets: KEEL loading, crossplane generation, stratified folds.

Labels are always encoded as +1 / -1.  Rows with label +1 form the matrix
``A`` of the twin formulation and rows with label -1 form ``B``.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .exceptions import (
    DegenerateDatasetError,
    FormatError,
    ParseError,
    ShapeError,
    StratificationError,
    UnsupportedDatasetError,
)

__all__ = [
    "Dataset",
    "ClassStats",
    "class_stats",
    "load_keel",
    "generate_crossplane",
    "stratified_kfold",
    "stratified_split",
    "minmax_scale",
    "save_csv",
    "load_csv",
    "CROSSPLANE_POSITIVE_LINE",
    "CROSSPLANE_NEGATIVE_LINE",
]

# (slope, intercept) of the line each crossplane class is sampled from
CROSSPLANE_POSITIVE_LINE = (-0.6, 1.0)
CROSSPLANE_NEGATIVE_LINE = (0.7, 0.1)


@dataclass(frozen=True)
class Dataset:
    """Immutable labelled sample matrix.

    Parameters
    ----------
    features : ndarray of shape (m, n)
    labels : ndarray of shape (m,)
        Values in {+1, -1}.
    name : str
    """

    features: np.ndarray
    labels: np.ndarray
    name: str = "dataset"

    def __post_init__(self):
        X = np.array(self.features, dtype=float)
        y = np.array(self.labels, dtype=float).ravel()
        if X.ndim == 1:
            X = X.reshape(-1, 1)
        if X.ndim != 2:
            raise ShapeError("features must be a 2-D matrix")
        if X.shape[0] != y.shape[0]:
            raise ShapeError(
                f"{X.shape[0]} feature rows but {y.shape[0]} labels"
            )
        if not np.all(np.isfinite(X)):
            raise ValueError("features contain non-finite values")
        if not np.all(np.isin(y, (-1.0, 1.0))):
            raise ValueError("labels must be +1 or -1")
        X.setflags(write=False)
        y = y.astype(int)
        y.setflags(write=False)
        object.__setattr__(self, "features", X)
        object.__setattr__(self, "labels", y)

    @property
    def n_samples(self):
        return self.features.shape[0]

    @property
    def n_features(self):
        return self.features.shape[1]

    @property
    def A(self):
        """Rows of the +1 class."""
        return self.features[self.labels == 1]

    @property
    def B(self):
        """Rows of the -1 class."""
        return self.features[self.labels == -1]

    def subset(self, index, name=None):
        index = np.asarray(index)
        return Dataset(self.features[index], self.labels[index], name or self.name)


@dataclass(frozen=True)
class ClassStats:
    p: int
    q: int
    ir: float
    majority_label: int = field(default=1)


def class_stats(d: Dataset) -> ClassStats:
    """Class counts and imbalance ratio ``max(p, q) / min(p, q)``.

    A tie makes +1 the majority class.
    """
    p = int(np.sum(d.labels == 1))
    q = int(np.sum(d.labels == -1))
    if p == 0 or q == 0:
        raise DegenerateDatasetError(
            f"{d.name}: both classes must be non-empty (p={p}, q={q})"
        )
    return ClassStats(p=p, q=q, ir=max(p, q) / min(p, q),
                      majority_label=1 if p >= q else -1)


def _strip_comment(line):
    return line.split("%", 1)[0].strip()


def load_keel(path, name=None) -> Dataset:
    """Read a two-class KEEL ``.dat`` file.

    Header lines start with ``@``; ``@inputs``/``@outputs`` select the
    label column when present, otherwise the last column is the label.
    Attribute ranges are not checked.  The more frequent label token is
    mapped to +1 (the first token seen wins a tie).
    """
    path = Path(path)
    lines = path.read_text().splitlines()

    attributes = []
    inputs = outputs = None
    data_start = None
    for lineno, raw in enumerate(lines, start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if not line.startswith("@"):
            raise FormatError(f"{path}: data row before '@data' at line {lineno}")
        key, _, rest = line.partition(" ")
        key = key.lower()
        if key == "@attribute":
            attr = rest.strip().split()[0] if rest.strip() else ""
            attr = attr.split("{")[0].split("[")[0]
            attributes.append(attr)
        elif key in ("@inputs", "@input"):
            inputs = [s.strip() for s in rest.split(",") if s.strip()]
        elif key in ("@outputs", "@output"):
            outputs = [s.strip() for s in rest.split(",") if s.strip()]
        elif key == "@data":
            data_start = lineno
            break
    if data_start is None:
        raise FormatError(f"{path}: missing '@data' marker")

    rows = []
    row_lines = []
    for lineno, raw in enumerate(lines[data_start:], start=data_start + 1):
        line = _strip_comment(raw)
        if not line:
            continue
        rows.append([cell.strip() for cell in line.split(",")])
        row_lines.append(lineno)
    if not rows:
        raise FormatError(f"{path}: no data rows after '@data'")

    width = len(rows[0])
    label_col = width - 1
    feature_cols = list(range(width - 1))
    if outputs and attributes and outputs[0] in attributes:
        label_col = attributes.index(outputs[0])
        if inputs:
            feature_cols = [attributes.index(a) for a in inputs if a in attributes]
        else:
            feature_cols = [j for j in range(width) if j != label_col]

    X = np.empty((len(rows), len(feature_cols)))
    tokens = []
    for i, (row, lineno) in enumerate(zip(rows, row_lines)):
        if len(row) != width:
            raise ParseError(f"{path}: expected {width} cells, got {len(row)}",
                             line=lineno)
        for k, j in enumerate(feature_cols):
            try:
                X[i, k] = float(row[j])
            except ValueError:
                raise ParseError(f"{path}: non-numeric attribute {row[j]!r}",
                                 line=lineno, column=j + 1) from None
        tokens.append(row[label_col])

    distinct = list(dict.fromkeys(tokens))
    if len(distinct) != 2:
        raise UnsupportedDatasetError(
            f"{path}: expected exactly two class labels, found {len(distinct)}"
        )
    counts = {t: tokens.count(t) for t in distinct}
    positive = distinct[0] if counts[distinct[0]] >= counts[distinct[1]] else distinct[1]
    y = np.where(np.array(tokens) == positive, 1, -1)
    return Dataset(X, y, name or path.stem)


def generate_crossplane(n_pos, n_neg, noise_scale=0.0, seed=0, x_range=(0.0, 1.0),
                        name=None) -> Dataset:
    """Two noisy line segments that cross inside the unit square.

    Positive samples follow ``y = -0.6 x + 1`` and negative samples follow
    ``y = 0.7 x + 0.1``; ``x`` is uniform on `x_range` and the vertical
    offset is uniform on ``[-noise_scale, noise_scale]``.
    """
    if n_pos < 1 or n_neg < 1:
        raise ValueError("both classes need at least one sample")
    if noise_scale < 0:
        raise ValueError("noise_scale must be non-negative")
    rng = np.random.default_rng(seed)
    blocks = []
    for count, (slope, intercept) in ((n_pos, CROSSPLANE_POSITIVE_LINE),
                                      (n_neg, CROSSPLANE_NEGATIVE_LINE)):
        x = rng.uniform(x_range[0], x_range[1], size=count)
        eps = rng.uniform(-noise_scale, noise_scale, size=count)
        blocks.append(np.column_stack([x, slope * x + intercept + eps]))
    X = np.vstack(blocks)
    y = np.concatenate([np.ones(n_pos, dtype=int), -np.ones(n_neg, dtype=int)])
    return Dataset(X, y, name or f"crossplane{n_pos + n_neg}")


def stratified_kfold(d: Dataset, k: int, seed=0) -> np.ndarray:
    """Fold index in ``[0, k)`` for every row.

    Each class is shuffled and dealt round-robin; the dealing position
    carries over from one class to the next so fold sizes stay balanced.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    rng = np.random.default_rng(seed)
    folds = np.empty(d.n_samples, dtype=int)
    offset = 0
    for label in (1, -1):
        idx = np.flatnonzero(d.labels == label)
        if idx.size < k:
            raise StratificationError(
                f"{d.name}: class {label:+d} has {idx.size} samples, fewer than k={k}"
            )
        idx = rng.permutation(idx)
        folds[idx] = (np.arange(idx.size) + offset) % k
        offset = (offset + idx.size) % k
    return folds


def stratified_split(d: Dataset, train_fraction=0.6, seed=0):
    """Train/test row indices, keeping class proportions."""
    if not 0 < train_fraction < 1:
        raise ValueError("train_fraction must lie in (0, 1)")
    rng = np.random.default_rng(seed)
    train = []
    for label in (1, -1):
        idx = rng.permutation(np.flatnonzero(d.labels == label))
        n_train = int(round(train_fraction * idx.size))
        n_train = min(max(n_train, 1), idx.size - 1)
        train.append(idx[:n_train])
    train = np.sort(np.concatenate(train))
    test = np.setdiff1d(np.arange(d.n_samples), train)
    return train, test


def minmax_scale(train: Dataset, *others: Dataset):
    """Scale columns to [0, 1] using the ranges of `train` only."""
    lo = train.features.min(axis=0)
    span = train.features.max(axis=0) - lo
    span[span == 0] = 1.0
    out = [Dataset((d.features - lo) / span, d.labels, d.name) for d in (train,) + others]
    return out[0] if not others else tuple(out)


def save_csv(d: Dataset, path):
    """Headerless CSV: feature columns then a +1/-1 label column."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for row, label in zip(d.features, d.labels):
            writer.writerow([repr(float(v)) for v in row] + [int(label)])


def load_csv(path, name=None) -> Dataset:
    rows = []
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row:
                continue
            try:
                rows.append([float(v) for v in row])
            except ValueError:
                raise ParseError(f"{path}: non-numeric cell", line=lineno) from None
    if not rows:
        raise FormatError(f"{path}: empty file")
    data = np.array(rows)
    return Dataset(data[:, :-1], data[:, -1], name or Path(path).stem)
