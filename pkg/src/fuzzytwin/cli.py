"""Configuration-driven experiment runner.

Verbs::

    fuzzytwin run <config.yaml>
    fuzzytwin sweep-energy <config.yaml> --model M --e1 0.6 0.8 1 --e2 0.6 0.8 1
    fuzzytwin rank-report <results.csv>
    fuzzytwin gen-crossplane --pos 75 --neg 75 --noise 0 --seed 1 --out data.csv

The config is YAML; see ``load_config`` for the keys.  Every number
written to a report uses 6 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import yaml

from .dataset import (
    Dataset,
    generate_crossplane,
    load_csv,
    load_keel,
    minmax_scale,
    save_csv,
    stratified_kfold,
    stratified_split,
)
from .evaluation import (
    DEFAULT_GRIDS,
    Grids,
    auc,
    cross_val_auc,
    friedman,
    grid_search_cv,
    nemenyi_cd,
    nemenyi_q,
    rank_table,
    significant_pairs,
)
from .exceptions import ContractError, FormatError, FuzzyTwinError, ParseError
from .kernel import KernelSpec
from .membership import DEFAULT_DELTA, IfmaParams
from .models import ENERGY_MODELS, MODEL_IDS, REGULARIZED_MODELS, train
from .solver import SolverParams, save_model

__all__ = [
    "ExperimentConfig",
    "load_config",
    "load_dataset",
    "run_experiment",
    "sweep_energy",
    "rank_report",
    "read_results",
    "read_ranks",
    "read_surface",
    "main",
]

log = logging.getLogger("fuzzytwin")

RESULT_FIELDS = ["dataset", "model", "kernel", "auc", "c1", "c2", "c3", "c4", "e1", "e2",
                 "sigma", "n_combinations", "n_failed", "status"]
CD_ALPHA = 0.10


def fmt(x) -> str:
    return format(float(x), ".6g")


@dataclass
class ExperimentConfig:
    """Everything `run_experiment` and `sweep_energy` need.

    ``datasets`` holds file paths (``.dat`` in KEEL format, anything else
    as headerless CSV with the label last) or generator mappings such as
    ``{"crossplane": {"pos": 75, "neg": 75, "noise": 0.0, "seed": 1}}``.
    """

    datasets: list
    models: tuple = MODEL_IDS
    kernel: str = "linear"
    grids: Grids = DEFAULT_GRIDS
    folds: int = 5
    seed: int = 0
    output_dir: Path = Path("results")
    protocol: str = "cv"
    train_fraction: float = 0.6
    scale: bool = False
    ifma_delta: float = DEFAULT_DELTA
    ifma_gamma: float | None = None
    pfma_delta: float = DEFAULT_DELTA
    pfma_per_class: bool = False
    sweep_c: float = 1.0
    sweep_c_reg: float = 1.0
    sweep_sigma: float = 1.0
    save_models: bool = False
    workers: int | None = None
    base_dir: Path = field(default_factory=Path.cwd)

    def __post_init__(self):
        if not self.datasets:
            raise ContractError("config needs at least one dataset")
        self.models = tuple(self.models)
        if not self.models:
            raise ContractError("config needs at least one model")
        for m in self.models:
            if m not in MODEL_IDS:
                raise ContractError(f"unknown model {m!r}; choose from {MODEL_IDS}")
        if self.kernel not in ("linear", "gaussian", "both"):
            raise ContractError("kernel must be linear, gaussian or both")
        if int(self.folds) < 2:
            raise ContractError("folds must be at least 2")
        if self.protocol not in ("cv", "holdout"):
            raise ContractError("protocol must be cv or holdout")
        self.folds = int(self.folds)
        self.seed = int(self.seed)
        self.base_dir = Path(self.base_dir)
        self.output_dir = self.base_dir / Path(self.output_dir)

    @property
    def families(self):
        return ("linear", "gaussian") if self.kernel == "both" else (self.kernel,)

    def train_kwargs(self):
        return dict(ifma=IfmaParams(self.ifma_delta, self.ifma_gamma),
                    pfma_delta=self.pfma_delta, pfma_per_class=self.pfma_per_class)


_CONFIG_KEYS = {
    "datasets", "models", "kernel", "grids", "folds", "seed", "output_dir", "protocol",
    "train_fraction", "scale", "ifma", "pfma", "sweep", "save_models", "workers",
}


def load_config(path) -> ExperimentConfig:
    """Read a YAML config.

    Keys: ``datasets`` (required), ``models``, ``kernel``
    (linear|gaussian|both), ``grids`` (``sigma``, ``c``, ``c_reg``, ``e``
    lists; missing lists fall back to the full default search space),
    ``folds``, ``seed``, ``output_dir``, ``protocol`` (cv|holdout),
    ``train_fraction``, ``scale``, ``ifma`` (``delta``, ``gamma``), ``pfma``
    (``delta``, ``per_class``), ``sweep`` (``c``, ``c_reg``, ``sigma``),
    ``save_models``, ``workers``.  Relative paths are taken relative to the
    config file.
    """
    path = Path(path)
    try:
        raw = yaml.safe_load(path.read_text()) or {}
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        raise ParseError(f"{path}: invalid YAML", line=mark.line + 1 if mark else None) from None
    if not isinstance(raw, dict):
        raise FormatError(f"{path}: config must be a mapping")
    unknown = set(raw) - _CONFIG_KEYS
    if unknown:
        raise FormatError(f"{path}: unknown config keys {sorted(unknown)}")
    grids = raw.get("grids") or {}
    unknown = set(grids) - {"sigma", "c", "c_reg", "e"}
    if unknown:
        raise FormatError(f"{path}: unknown grid keys {sorted(unknown)}")
    ifma = raw.get("ifma") or {}
    pfma = raw.get("pfma") or {}
    sweep = raw.get("sweep") or {}
    gamma = ifma.get("gamma")
    return ExperimentConfig(
        datasets=list(raw.get("datasets") or []),
        models=tuple(raw.get("models") or MODEL_IDS),
        kernel=raw.get("kernel", "linear"),
        grids=Grids(**{k: tuple(v) for k, v in grids.items()}),
        folds=raw.get("folds", 5),
        seed=raw.get("seed", 0),
        output_dir=Path(raw.get("output_dir", "results")),
        protocol=raw.get("protocol", "cv"),
        train_fraction=float(raw.get("train_fraction", 0.6)),
        scale=bool(raw.get("scale", False)),
        ifma_delta=float(ifma.get("delta", DEFAULT_DELTA)),
        ifma_gamma=None if gamma is None else float(gamma),
        pfma_delta=float(pfma.get("delta", DEFAULT_DELTA)),
        pfma_per_class=bool(pfma.get("per_class", False)),
        sweep_c=float(sweep.get("c", 1.0)),
        sweep_c_reg=float(sweep.get("c_reg", 1.0)),
        sweep_sigma=float(sweep.get("sigma", 1.0)),
        save_models=bool(raw.get("save_models", False)),
        workers=raw.get("workers"),
        base_dir=path.parent,
    )


def dataset_label(entry) -> str:
    if isinstance(entry, dict):
        if "name" in entry:
            return str(entry["name"])
        if "crossplane" in entry:
            g = entry["crossplane"] or {}
            return str(g.get("name", f"crossplane{int(g.get('pos', 75)) + int(g.get('neg', 75))}"))
        if "path" in entry:
            return Path(entry["path"]).stem
        return "dataset"
    return Path(entry).stem


def load_dataset(entry, base_dir=Path(".")) -> Dataset:
    """Materialise one ``datasets`` entry of the config."""
    name = dataset_label(entry)
    if isinstance(entry, dict) and "crossplane" in entry:
        g = dict(entry["crossplane"] or {})
        x_range = tuple(g.get("x_range", (0.0, 1.0)))
        return generate_crossplane(int(g.get("pos", 75)), int(g.get("neg", 75)),
                                   float(g.get("noise", 0.0)), int(g.get("seed", 0)),
                                   x_range=x_range, name=name)
    if isinstance(entry, dict):
        if "path" not in entry:
            raise FormatError(f"dataset entry needs 'path' or 'crossplane': {entry!r}")
        entry = entry["path"]
    path = Path(base_dir) / Path(entry)
    if path.suffix.lower() == ".dat":
        return load_keel(path, name)
    return load_csv(path, name)


def _result_row(dataset, model, family, score=None, params=None, spec=None,
                n_combinations=0, n_failed=0, status="ok"):
    row = dict.fromkeys(RESULT_FIELDS, "")
    row.update(dataset=dataset, model=model, kernel=family, status=status)
    if score is not None:
        row["auc"] = fmt(100.0 * score)
        for k, v in params.as_dict().items():
            row[k] = fmt(v)
        if model not in REGULARIZED_MODELS:
            row["c3"] = row["c4"] = ""
        if model not in ENERGY_MODELS:
            row["e1"] = row["e2"] = ""
        row["sigma"] = fmt(spec.sigma) if not spec.is_linear else ""
        row["n_combinations"] = str(n_combinations)
        row["n_failed"] = str(n_failed)
    return row


def _evaluate(cfg: ExperimentConfig, d: Dataset, model_id, family):
    """Tune, score and time one (dataset, model, kernel) cell."""
    kwargs = cfg.train_kwargs()
    if cfg.protocol == "cv":
        data = minmax_scale(d) if cfg.scale else d
        res = grid_search_cv(data, model_id, cfg.grids, k=cfg.folds, seed=cfg.seed,
                             family=family, workers=cfg.workers, **kwargs)
        t0 = time.perf_counter()
        model = train(model_id, data, res.params, res.spec, **kwargs)
        seconds = time.perf_counter() - t0
        score = res.score
    else:
        tr, te = stratified_split(d, cfg.train_fraction, cfg.seed)
        train_d, test_d = d.subset(tr), d.subset(te)
        if cfg.scale:
            train_d, test_d = minmax_scale(train_d, test_d)
        res = grid_search_cv(train_d, model_id, cfg.grids, k=cfg.folds, seed=cfg.seed,
                             family=family, workers=cfg.workers, **kwargs)
        t0 = time.perf_counter()
        model = train(model_id, train_d, res.params, res.spec, **kwargs)
        seconds = time.perf_counter() - t0
        score = auc(test_d.labels, model.predict(test_d.features))
    return res, score, seconds, model


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def run_experiment(cfg: ExperimentConfig) -> dict:
    """Grid-search every (dataset, model, kernel) cell and write the reports.

    Writes ``results.csv`` (best parameters and AUC in percent, or an
    ``error: ...`` status), ``timings.csv`` (fit wall time, kept apart so
    that ``results.csv`` is reproducible byte for byte), and the
    `rank_report` outputs computed from ``results.csv``.  Returns a dict
    with the output paths, the result rows and ``ok`` (False iff every
    row failed).
    """
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows, timings, seen = [], [], {}
    for entry in cfg.datasets:
        name = dataset_label(entry)
        seen[name] = seen.get(name, 0) + 1
        if seen[name] > 1:
            name = f"{name}_{seen[name]}"
        try:
            d = load_dataset(entry, cfg.base_dir)
            d = Dataset(d.features, d.labels, name)
        except (FuzzyTwinError, ValueError, OSError) as exc:
            log.error("dataset %s failed to load: %s", name, exc)
            for family in cfg.families:
                for model_id in cfg.models:
                    rows.append(_result_row(name, model_id, family, status=f"error: {exc}"))
            continue
        for family in cfg.families:
            for model_id in cfg.models:
                log.info("%s / %s / %s", name, model_id, family)
                try:
                    res, score, seconds, model = _evaluate(cfg, d, model_id, family)
                except (FuzzyTwinError, ValueError, ArithmeticError) as exc:
                    log.error("%s / %s / %s failed: %s", name, model_id, family, exc)
                    rows.append(_result_row(name, model_id, family, status=f"error: {exc}"))
                    continue
                rows.append(_result_row(name, model_id, family, score, res.params, res.spec,
                                        res.n_combinations, res.n_failed))
                timings.append([name, model_id, family, fmt(seconds)])
                if cfg.save_models:
                    mdir = out / "models"
                    mdir.mkdir(exist_ok=True)
                    save_model(model, mdir / f"{name}__{model_id}__{family}.json")

    results_path = out / "results.csv"
    _write_csv(results_path, RESULT_FIELDS, [[r[k] for k in RESULT_FIELDS] for r in rows])
    _write_csv(out / "timings.csv", ["dataset", "model", "kernel", "train_seconds"], timings)
    ok = any(r["status"] == "ok" for r in rows)
    report = None
    if ok and len(cfg.models) >= 2:
        try:
            report = rank_report(results_path, out)
        except FormatError as exc:
            log.warning("no rank report: %s", exc)
    return {"results": results_path, "timings": out / "timings.csv", "rows": rows,
            "report": report, "ok": ok}


def sweep_energy(cfg: ExperimentConfig, model, e1_grid, e2_grid, out=None) -> Path:
    """Mean CV AUC (fraction in [0, 1]) over the full ``e1 x e2`` grid.

    ``c1 = c2``, ``c3 = c4`` and ``sigma`` are fixed from the config's
    ``sweep`` section.  One row per dataset, kernel and energy pair.
    """
    if model not in ENERGY_MODELS:
        raise ContractError(f"{model!r} has no energy parameters; choose from {ENERGY_MODELS}")
    e1_grid = [float(v) for v in e1_grid]
    e2_grid = [float(v) for v in e2_grid]
    if not e1_grid or not e2_grid:
        raise ContractError("energy grids must be non-empty")
    for v in e1_grid + e2_grid:
        if not 0 < v <= 1:
            raise ContractError(f"energy values must lie in (0, 1], got {v}")
    out = Path(out) if out is not None else Path(cfg.output_dir) / f"energy_{model}.csv"
    out.parent.mkdir(parents=True, exist_ok=True)
    kwargs = cfg.train_kwargs()
    rows = []
    for entry in cfg.datasets:
        d = load_dataset(entry, cfg.base_dir)
        if cfg.scale:
            d = minmax_scale(d)
        folds = stratified_kfold(d, cfg.folds, cfg.seed)
        for family in cfg.families:
            spec = KernelSpec(family, cfg.sweep_sigma)
            for e1 in e1_grid:
                for e2 in e2_grid:
                    params = SolverParams(cfg.sweep_c, cfg.sweep_c, cfg.sweep_c_reg,
                                          cfg.sweep_c_reg, e1, e2)
                    score = float(np.mean(cross_val_auc(d, model, params, spec, folds, **kwargs)))
                    rows.append([d.name, family, fmt(e1), fmt(e2), fmt(score)])
    _write_csv(out, ["dataset", "kernel", "e1", "e2", "mean_cv_auc"], rows)
    return out


def _read_rows(path):
    path = Path(path)
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise FormatError(f"{path}: empty file")
    return rows[0], [(i, r) for i, r in enumerate(rows[1:], start=2) if r]


def _number(path, cell, line, column):
    try:
        return float(cell)
    except ValueError:
        raise ParseError(f"{path}: expected a number, got {cell!r}", line=line,
                         column=column) from None


def read_results(path) -> list:
    """Rows of a ``results.csv`` as dicts (``auc`` as float or None)."""
    header, rows = _read_rows(path)
    if header != RESULT_FIELDS:
        raise FormatError(f"{path}: not a results file")
    out = []
    for line, r in rows:
        if len(r) != len(header):
            raise ParseError(f"{path}: expected {len(header)} cells, got {len(r)}", line=line)
        rec = dict(zip(header, r))
        rec["auc"] = None if rec["auc"] == "" else _number(path, rec["auc"], line, 4)
        out.append(rec)
    return out


def _score_tables(path):
    """``{kernel: (datasets, models, matrix)}`` from long or wide CSV."""
    header, rows = _read_rows(path)
    cols = [h.strip().lower() for h in header]
    if "model" in cols and "auc" in cols:
        i_d = cols.index("dataset") if "dataset" in cols else 0
        i_m, i_a = cols.index("model"), cols.index("auc")
        i_k = cols.index("kernel") if "kernel" in cols else None
        i_s = cols.index("status") if "status" in cols else None
        cells = {}
        for line, r in rows:
            if len(r) != len(header):
                raise ParseError(f"{path}: expected {len(header)} cells, got {len(r)}", line=line)
            if i_s is not None and r[i_s] != "ok":
                continue
            kern = r[i_k] if i_k is not None else "all"
            value = _number(path, r[i_a], line, i_a + 1)
            by_model = cells.setdefault(kern, {}).setdefault(r[i_d], {})
            if r[i_m] in by_model:
                raise ParseError(f"{path}: duplicate row for {r[i_d]}/{r[i_m]}/{kern}", line=line)
            by_model[r[i_m]] = value
        tables = {}
        for kern, by_ds in cells.items():
            models = []
            for scores in by_ds.values():
                models += [m for m in scores if m not in models]
            keep = [ds for ds, s in by_ds.items() if all(m in s for m in models)]
            dropped = set(by_ds) - set(keep)
            if dropped:
                log.warning("%s: skipping incomplete datasets %s", kern, sorted(dropped))
            M = np.array([[by_ds[ds][m] for m in models] for ds in keep]).reshape(len(keep), -1)
            tables[kern] = (keep, models, M)
        return tables
    models = [h.strip() for h in header[1:]]
    datasets, M = [], []
    for line, r in rows:
        if len(r) != len(header):
            raise ParseError(f"{path}: expected {len(header)} cells, got {len(r)}", line=line)
        datasets.append(r[0])
        M.append([_number(path, c, line, j + 2) for j, c in enumerate(r[1:])])
    return {"all": (datasets, models, np.array(M).reshape(len(datasets), len(models)))}


def rank_report(results_csv, out_dir=None) -> dict:
    """Ranks, Friedman and Nemenyi statistics from a score file alone.

    Accepts the long ``results.csv`` written by `run_experiment` (ranked
    separately per kernel) or a wide table ``dataset,<model>,<model>,...``.
    Writes ``ranks.csv``, ``stats.txt`` and ``cd.csv`` to `out_dir`
    (default: next to the input) and returns ``{kernel: dict}``.
    """
    results_csv = Path(results_csv)
    out = Path(out_dir) if out_dir is not None else results_csv.parent
    out.mkdir(parents=True, exist_ok=True)
    tables = _score_tables(results_csv)
    report, rank_rows, cd_rows, lines = {}, [], [], []
    header_models = None
    for kern, (datasets, models, M) in tables.items():
        if len(models) < 2:
            raise FormatError(f"{results_csv}: ranking needs at least two models, found {models}")
        if not datasets:
            raise FormatError(f"{results_csv}: no dataset has scores for every model ({kern})")
        if header_models is None:
            header_models = models
        elif models != header_models:
            raise FormatError(f"{results_csv}: kernels disagree on the model list")
        rt = rank_table(M, datasets, models)
        fr = friedman(rt)
        k, N = rt.n_algorithms, rt.n_datasets
        q = nemenyi_q(k, CD_ALPHA)
        cd = nemenyi_cd(k, N, q)
        pairs = significant_pairs(rt.avg_ranks, cd)
        report[kern] = {"table": rt, "friedman": fr, "q": q, "cd": cd, "pairs": pairs}
        for ds, r in zip(datasets, rt.ranks):
            rank_rows.append([kern, ds] + [fmt(v) for v in r])
        rank_rows.append([kern, "average"] + [fmt(v) for v in rt.avg_ranks])
        for m, r in zip(models, rt.avg_ranks):
            cd_rows.append([kern, m, fmt(r), fmt(cd)])
        lines += [
            f"[{kern}] N={N} datasets, k={k} algorithms",
            "average ranks: " + ", ".join(f"{m}={fmt(r)}" for m, r in zip(models, rt.avg_ranks)),
            f"friedman chi2 = {fmt(fr.chi2)} (dof {fr.dof1}, p = {fmt(fr.chi2_pvalue)})",
            f"iman-davenport F_F = {fmt(fr.ff)} (dof {fr.dof1}, {fr.dof2}, p = {fmt(fr.ff_pvalue)}, "
            f"critical 0.05 = {fmt(fr.ff_critical(0.05)) if fr.dof2 > 0 else 'nan'})",
            f"nemenyi alpha = {CD_ALPHA:g}, q = {fmt(q)}, CD = {fmt(cd)}",
        ]
        for i, j, gap, sig in pairs:
            lines.append(f"  {models[i]} vs {models[j]}: |diff| = {fmt(gap)} "
                         f"{'significant' if sig else 'not significant'}")
        lines.append("")
    _write_csv(out / "ranks.csv", ["kernel", "dataset"] + list(header_models), rank_rows)
    _write_csv(out / "cd.csv", ["kernel", "algorithm", "avg_rank", "cd"], cd_rows)
    (out / "stats.txt").write_text("\n".join(lines))
    return report


def read_ranks(path) -> dict:
    """``{kernel: (datasets, models, rank matrix)}`` from a ``ranks.csv``."""
    header, rows = _read_rows(path)
    if header[:2] != ["kernel", "dataset"]:
        raise FormatError(f"{path}: not a ranks file")
    models = header[2:]
    out = {}
    for line, r in rows:
        if r[1] == "average":
            continue
        vals = [_number(path, c, line, j + 3) for j, c in enumerate(r[2:])]
        ds, M = out.setdefault(r[0], ([], []))[:2]
        ds.append(r[1])
        M.append(vals)
    return {k: (ds, models, np.array(M)) for k, (ds, M) in out.items()}


def read_surface(path) -> list:
    """``(dataset, kernel, e1, e2, mean_cv_auc)`` tuples from a sweep file."""
    header, rows = _read_rows(path)
    if header != ["dataset", "kernel", "e1", "e2", "mean_cv_auc"]:
        raise FormatError(f"{path}: not an energy sweep file")
    return [(r[0], r[1]) + tuple(_number(path, c, line, j + 3) for j, c in enumerate(r[2:]))
            for line, r in rows]


def _build_parser():
    p = argparse.ArgumentParser(prog="fuzzytwin", description=__doc__.split("\n")[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="grid-search every dataset x model x kernel")
    r.add_argument("config")

    s = sub.add_parser("sweep-energy", help="mean CV AUC over an E1 x E2 grid")
    s.add_argument("config")
    s.add_argument("--model", required=True, choices=ENERGY_MODELS)
    s.add_argument("--e1", type=float, nargs="+", default=[0.6, 0.7, 0.8, 0.9, 1.0])
    s.add_argument("--e2", type=float, nargs="+", default=[0.6, 0.7, 0.8, 0.9, 1.0])
    s.add_argument("--out", help="output CSV (default: <output_dir>/energy_<model>.csv)")

    k = sub.add_parser("rank-report", help="ranks, Friedman and Nemenyi from a score CSV")
    k.add_argument("results")
    k.add_argument("--out-dir")

    g = sub.add_parser("gen-crossplane", help="write a crossplane dataset as CSV")
    g.add_argument("--pos", type=int, required=True)
    g.add_argument("--neg", type=int, required=True)
    g.add_argument("--noise", type=float, default=0.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--x-min", type=float, default=0.0)
    g.add_argument("--x-max", type=float, default=1.0)
    g.add_argument("--out", required=True)
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        if args.command == "run":
            res = run_experiment(load_config(args.config))
            print(f"wrote {res['results']}")
            return 0 if res["ok"] else 1
        if args.command == "sweep-energy":
            out = sweep_energy(load_config(args.config), args.model, args.e1, args.e2, args.out)
            print(f"wrote {out}")
            return 0
        if args.command == "rank-report":
            report = rank_report(args.results, args.out_dir)
            for kern, r in report.items():
                fr = r["friedman"]
                print(f"[{kern}] chi2 = {fmt(fr.chi2)}  F_F = {fmt(fr.ff)}  CD = {fmt(r['cd'])}")
            return 0
        if args.command == "gen-crossplane":
            d = generate_crossplane(args.pos, args.neg, args.noise, args.seed,
                                    x_range=(args.x_min, args.x_max))
            save_csv(d, args.out)
            print(f"wrote {args.out}")
            return 0
    except (FuzzyTwinError, ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
