"""Nested leave-persons-out evaluation of the fusion pipelines.

The outer loop partitions participants into k folds; the inner loop re-tunes
hyperparameters per outer fold with an exhaustive, participant-grouped grid
search. Reported numbers are per-fold test R-squared values and their mean
("AvgR2"). The AV-dagger baseline predicts each video's training-fold mean
rating, the ceiling of a context-free model on the same data.
"""

from __future__ import annotations

import itertools
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from ._seeds import child_seed
from .folds import assign_group_folds, grouped_test_indices
from .fusion import (
    LateFusionParams,
    ModalityBundle,
    early_fusion_fit,
    fusion_predict,
    late_fusion_fit,
)
from .model import Dataset, memory_subset
from .regressors import ForestParams, SvrParams
from .text import TextFeatureExtractor, load_resources

DIMS = ("p", "a", "d")
CONDITIONS = ("M", "AV", "AVM", "AVdagger")  # AVdagger renders as AV†
STRATEGIES = ("early", "late")
CONDITION_DISPLAY = {"M": "M", "AV": "AV", "AVM": "AVM", "AVdagger": "AV†"}

_CONDITION_MODALITIES = {
    "M": ("mem_lexical", "mem_embedding"),
    "AV": ("audio", "visual"),
    "AVM": ("audio", "visual", "mem_lexical", "mem_embedding"),
}

__all__ = [
    "DIMS",
    "CONDITIONS",
    "STRATEGIES",
    "CvPlan",
    "make_lpo_folds",
    "r2_score",
    "pearson",
    "av_dagger_baseline",
    "validate_grid",
    "grid_search",
    "PipelineSpec",
    "pipeline_for",
    "CellResult",
    "ExperimentReport",
    "run_experiment1",
    "run_experiment2",
    "annotator_agreement",
    "AgreementTable",
]


# ---------------------------------------------------------------------------
# Fold plans and metrics


@dataclass(frozen=True)
class CvPlan:
    k: int
    assignments: dict[str, int]  # participant id -> fold index
    seed: int

    def fold_of(self, participant_id: str) -> int:
        return self.assignments[participant_id]


def make_lpo_folds(participants: Sequence[str] | set[str], k: int, seed: int) -> CvPlan:
    """Assign participants to k folds; sizes differ by at most one."""
    assignments = assign_group_folds(list(participants), k, seed)
    return CvPlan(k=k, assignments=assignments, seed=seed)


def r2_score(y_true: np.ndarray, y_pred: np.ndarray) -> float:
    y_true = np.asarray(y_true, dtype=float)
    y_pred = np.asarray(y_pred, dtype=float)
    if y_true.shape != y_pred.shape:
        raise ValueError(f"length mismatch: {y_true.shape} vs {y_pred.shape}")
    if y_true.shape[0] < 2:
        raise ValueError("need at least two observations")
    ss_tot = float(np.sum((y_true - y_true.mean()) ** 2))
    if ss_tot == 0.0:
        raise ValueError("zero variance in y_true")
    ss_res = float(np.sum((y_true - y_pred) ** 2))
    return 1.0 - ss_res / ss_tot


def pearson(x: np.ndarray, y: np.ndarray) -> float:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.shape} vs {y.shape}")
    if x.shape[0] < 3:
        raise ValueError("need at least three observations")
    xc = x - x.mean()
    yc = y - y.mean()
    denom = math.sqrt(float(xc @ xc) * float(yc @ yc))
    if denom == 0.0:
        raise ValueError("constant input")
    return float(np.clip((xc @ yc) / denom, -1.0, 1.0))


def av_dagger_baseline(
    train_videos: Sequence[str],
    train_values: np.ndarray,
    test_videos: Sequence[str],
) -> np.ndarray:
    """Predict each test video's mean training rating (one dimension at a time).

    Videos never seen in training fall back to the global training mean, with
    a warning; at production scale every video appears in every training fold.
    """
    train_values = np.asarray(train_values, dtype=float)
    sums: dict[str, float] = {}
    counts: dict[str, int] = {}
    for vid, val in zip(train_videos, train_values):
        sums[vid] = sums.get(vid, 0.0) + float(val)
        counts[vid] = counts.get(vid, 0) + 1
    global_mean = float(train_values.mean())
    out = np.empty(len(test_videos))
    unseen = set()
    for i, vid in enumerate(test_videos):
        if vid in sums:
            out[i] = sums[vid] / counts[vid]
        else:
            out[i] = global_mean
            unseen.add(vid)
    if unseen:
        warnings.warn(
            f"videos absent from training folds, using global mean: {sorted(unseen)}",
            stacklevel=2,
        )
    return out


# ---------------------------------------------------------------------------
# Grid search


def validate_grid(grid: Mapping[str, Sequence]) -> None:
    if not grid:
        raise ValueError("empty grid")
    for name, values in grid.items():
        if not isinstance(values, (list, tuple)) or len(values) == 0:
            raise ValueError(f"grid entry {name!r} must be a non-empty list")


def _svr_params(hyper: Mapping[str, float]) -> SvrParams:
    return SvrParams(
        c=float(hyper.get("svr.c", 1.0)),
        epsilon=float(hyper.get("svr.epsilon", 0.1)),
        gamma=hyper.get("svr.gamma"),
        gamma_scale=float(hyper.get("svr.gamma_scale", 1.0)),
        tol=float(hyper.get("svr.tol", 1e-3)),
    )


def _forest_params(hyper: Mapping[str, float], seed: int) -> ForestParams:
    max_depth = hyper.get("forest.max_depth")
    return ForestParams(
        n_trees=int(hyper.get("forest.n_trees", 100)),
        max_features=float(hyper.get("forest.max_features", 1.0 / 3.0)),
        min_leaf=int(hyper.get("forest.min_leaf", 2)),
        max_depth=None if max_depth is None else int(max_depth),
        seed=seed,
    )


@dataclass(frozen=True)
class PipelineSpec:
    """A named model pipeline exposing fit/predict plus its tunable keys."""

    name: str
    grid_keys: tuple[str, ...]
    fit: Callable
    predict: Callable


_EARLY_KEYS = ("svr.c", "svr.epsilon", "svr.gamma", "svr.gamma_scale", "svr.tol")
_LATE_KEYS = _EARLY_KEYS + (
    "forest.n_trees",
    "forest.max_features",
    "forest.min_leaf",
    "forest.max_depth",
    "ridge.alpha",
    "stack.k_inner",
)


def pipeline_for(strategy: str) -> PipelineSpec:
    if strategy == "early":

        def fit_early(bundles, y, groups, hyper, seed):
            return early_fusion_fit(bundles, y, _svr_params(hyper))

        return PipelineSpec(
            name="early", grid_keys=_EARLY_KEYS, fit=fit_early, predict=fusion_predict
        )
    if strategy == "late":

        def fit_late(bundles, y, groups, hyper, seed):
            svr = _svr_params(hyper)
            params = LateFusionParams(
                audio=svr,
                visual=svr,
                memory=_forest_params(hyper, child_seed(seed, "forest")),
            )
            return late_fusion_fit(
                bundles,
                y,
                params,
                meta_alpha=float(hyper.get("ridge.alpha", 1.0)),
                k_inner=int(hyper.get("stack.k_inner", 4)),
                groups=groups,
                seed=seed,
            )

        return PipelineSpec(
            name="late", grid_keys=_LATE_KEYS, fit=fit_late, predict=fusion_predict
        )
    raise ValueError(f"unknown fusion strategy {strategy!r}")


def _sort_key(values: tuple) -> tuple:
    return tuple(math.inf if v is None else float(v) for v in values)


def grid_search(
    bundles: list[ModalityBundle],
    y: np.ndarray,
    groups: Sequence[str],
    grid: Mapping[str, Sequence],
    pipeline: PipelineSpec,
    k_inner: int = 4,
    seed: int = 0,
) -> tuple[dict, list[dict]]:
    """Exhaustive hyperparameter search scored by mean inner-fold test R2.

    Inner folds are participant-grouped. Ties break to the lexicographically
    smallest hyperparameter value tuple. A single-point grid short-circuits
    without fitting anything.
    """
    validate_grid(grid)
    y = np.asarray(y, dtype=float)
    keys = tuple(k for k in pipeline.grid_keys if k in grid)
    if not keys:
        raise ValueError(
            f"grid has no entries applicable to pipeline {pipeline.name!r}"
        )
    combos = [
        dict(zip(keys, values))
        for values in itertools.product(*(grid[k] for k in keys))
    ]
    if len(combos) == 1:
        return combos[0], [{"hyper": combos[0], "mean_r2": None, "fold_r2": []}]

    folds = grouped_test_indices(groups, k_inner, child_seed(seed, "inner-folds"))
    n = len(bundles)
    results = []
    for combo in combos:
        fold_scores = []
        for fold_idx, test_rows in enumerate(folds):
            mask = np.ones(n, dtype=bool)
            mask[test_rows] = False
            train_rows = np.flatnonzero(mask)
            train_groups = {groups[r] for r in train_rows}
            test_groups = {groups[r] for r in test_rows}
            assert not train_groups & test_groups, "inner fold leaks participants"
            model = pipeline.fit(
                [bundles[r] for r in train_rows],
                y[train_rows],
                [groups[r] for r in train_rows],
                combo,
                child_seed(seed, "inner-fit", fold_idx),
            )
            pred = pipeline.predict(model, [bundles[r] for r in test_rows])
            fold_scores.append(r2_score(y[test_rows], pred))
        results.append(
            {
                "hyper": combo,
                "mean_r2": float(np.mean(fold_scores)),
                "fold_r2": fold_scores,
            }
        )

    best = max(
        results,
        key=lambda r: (
            r["mean_r2"],
            tuple(-v for v in _sort_key(tuple(r["hyper"][k] for k in keys))),
        ),
    )
    return dict(best["hyper"]), results


# ---------------------------------------------------------------------------
# Experiment reports


@dataclass(frozen=True)
class CellResult:
    mean_r2: float
    fold_r2: tuple[float, ...]
    params: tuple[dict, ...] | None  # per-outer-fold selections; None for AV†


@dataclass
class ExperimentReport:
    experiment: str
    seed: int
    conditions: tuple[str, ...]
    strategies: tuple[str, ...]
    cells: dict[tuple[str, str, str], CellResult]  # (dim, condition, strategy)
    deltas: dict[tuple[str, str], float]  # (dim, strategy) -> AVM - AV

    def to_json(self) -> dict:
        return {
            "experiment": self.experiment,
            "seed": self.seed,
            "conditions": list(self.conditions),
            "strategies": list(self.strategies),
            "cells": {
                f"{dim}|{cond}|{strat}": {
                    "mean_r2": cell.mean_r2,
                    "fold_r2": list(cell.fold_r2),
                    "params": list(cell.params) if cell.params is not None else None,
                }
                for (dim, cond, strat), cell in sorted(self.cells.items())
            },
            "deltas": {
                f"{dim}|{strat}": value for (dim, strat), value in sorted(self.deltas.items())
            },
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ExperimentReport":
        cells = {}
        for key, val in doc["cells"].items():
            dim, cond, strat = key.split("|")
            cells[(dim, cond, strat)] = CellResult(
                mean_r2=float(val["mean_r2"]),
                fold_r2=tuple(float(v) for v in val["fold_r2"]),
                params=tuple(val["params"]) if val["params"] is not None else None,
            )
        deltas = {}
        for key, val in doc.get("deltas", {}).items():
            dim, strat = key.split("|")
            deltas[(dim, strat)] = float(val)
        return cls(
            experiment=doc["experiment"],
            seed=int(doc["seed"]),
            conditions=tuple(doc["conditions"]),
            strategies=tuple(doc["strategies"]),
            cells=cells,
            deltas=deltas,
        )

    def render_table(self) -> str:
        lines = [f"{self.experiment} (seed {self.seed})  AvgR² per dimension"]
        header = f"{'dim':4s} {'condition':10s}" + "".join(
            f"{s:>10s}" for s in self.strategies
        )
        lines.append(header)
        lines.append("-" * len(header))
        for dim in DIMS:
            for cond in self.conditions:
                row = f"{dim.upper():4s} {CONDITION_DISPLAY.get(cond, cond):10s}"
                present = False
                for strat in self.strategies:
                    cell = self.cells.get((dim, cond, strat))
                    if cell is None:
                        row += f"{'-':>10s}"
                    else:
                        row += f"{cell.mean_r2:>10.3f}"
                        present = True
                if present:
                    lines.append(row)
        if self.deltas:
            lines.append("")
            lines.append("ΔAvgR² (AVM - AV)")
            for dim in DIMS:
                parts = [
                    f"{strat}: {self.deltas[(dim, strat)]:+.3f}"
                    for strat in self.strategies
                    if (dim, strat) in self.deltas
                ]
                if parts:
                    lines.append(f"{dim.upper():4s} " + "  ".join(parts))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Experiment runners


def _subset_with_features(
    ds: Dataset,
    extractor: TextFeatureExtractor | None,
    need_text: bool,
):
    sub = memory_subset(ds)
    if len(sub) == 0:
        raise ValueError("dataset has no responses with memories")
    rows = list(sub.responses)
    text_feats = None
    if need_text:
        if extractor is None:
            extractor = TextFeatureExtractor(load_resources())
        text_feats = [extractor.extract(r.memories[0].text) for r in rows]
    return rows, text_feats


def _make_bundles(
    rows,
    condition: str,
    text_feats,
    av_features: Mapping[str, Mapping[str, np.ndarray]] | None,
) -> list[ModalityBundle]:
    modalities = _CONDITION_MODALITIES[condition]
    bundles = []
    for i, row in enumerate(rows):
        kwargs = {}
        if "audio" in modalities:
            kwargs["audio"] = av_features[row.video_id]["audio"]
        if "visual" in modalities:
            kwargs["visual"] = av_features[row.video_id]["visual"]
        if "mem_lexical" in modalities:
            kwargs["mem_lexical"] = text_feats[i].lexical
        if "mem_embedding" in modalities:
            kwargs["mem_embedding"] = text_feats[i].embedding
        bundles.append(ModalityBundle(**kwargs))
    return bundles


def _run_cells(
    rows,
    bundles_by_condition: dict[str, list[ModalityBundle]],
    conditions: Sequence[str],
    strategies: Sequence[str],
    grid: Mapping[str, Sequence],
    seed: int,
    k_outer: int,
    k_inner: int,
    workers: int,
    dims: Sequence[str],
) -> dict[tuple[str, str, str], CellResult]:
    participants = [r.participant_id for r in rows]
    plan = make_lpo_folds(set(participants), k_outer, child_seed(seed, "outer-folds"))
    fold_labels = np.array([plan.fold_of(pid) for pid in participants])
    targets = {
        dim: np.array([getattr(r.induced, dim) for r in rows]) for dim in dims
    }
    videos = [r.video_id for r in rows]

    tasks = []
    for dim in dims:
        for cond in conditions:
            for strat in strategies if cond != "AVdagger" else ("oracle",):
                for fold in range(k_outer):
                    tasks.append((dim, cond, strat, fold))

    def run_task(task):
        dim, cond, strat, fold = task
        test_rows = np.flatnonzero(fold_labels == fold)
        train_rows = np.flatnonzero(fold_labels != fold)
        train_p = {participants[r] for r in train_rows}
        test_p = {participants[r] for r in test_rows}
        assert not train_p & test_p, "outer fold leaks participants"
        y = targets[dim]
        if cond == "AVdagger":
            pred = av_dagger_baseline(
                [videos[r] for r in train_rows],
                y[train_rows],
                [videos[r] for r in test_rows],
            )
            return task, r2_score(y[test_rows], pred), None
        bundles = bundles_by_condition[cond]
        pipeline = pipeline_for(strat)
        task_seed = child_seed(seed, dim, cond, strat, fold)
        best, _ = grid_search(
            [bundles[r] for r in train_rows],
            y[train_rows],
            [participants[r] for r in train_rows],
            grid,
            pipeline,
            k_inner=k_inner,
            seed=task_seed,
        )
        model = pipeline.fit(
            [bundles[r] for r in train_rows],
            y[train_rows],
            [participants[r] for r in train_rows],
            best,
            child_seed(task_seed, "final"),
        )
        pred = pipeline.predict(model, [bundles[r] for r in test_rows])
        return task, r2_score(y[test_rows], pred), best

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run_task, tasks))
    else:
        outcomes = [run_task(t) for t in tasks]

    cells: dict[tuple[str, str, str], CellResult] = {}
    by_cell: dict[tuple[str, str, str], list] = {}
    for (dim, cond, strat, fold), score, best in outcomes:
        by_cell.setdefault((dim, cond, strat), []).append((fold, score, best))
    for key, entries in by_cell.items():
        entries.sort(key=lambda e: e[0])
        scores = tuple(score for _, score, _ in entries)
        params = tuple(best for _, _, best in entries if best is not None) or None
        dim, cond, strat = key
        if cond == "AVdagger":
            # report the oracle under each requested strategy column
            for strategy in strategies:
                cells[(dim, cond, strategy)] = CellResult(
                    mean_r2=float(np.mean(scores)), fold_r2=scores, params=None
                )
        else:
            cells[key] = CellResult(
                mean_r2=float(np.mean(scores)), fold_r2=scores, params=params
            )
    return cells


def run_experiment1(
    ds: Dataset,
    grid: Mapping[str, Sequence],
    seed: int,
    extractor: TextFeatureExtractor | None = None,
    k_outer: int = 5,
    k_inner: int = 4,
    workers: int = 1,
    dims: Sequence[str] = DIMS,
) -> ExperimentReport:
    """Predict induced emotion from memory descriptions alone."""
    validate_grid(grid)
    rows, text_feats = _subset_with_features(ds, extractor, need_text=True)
    bundles = {"M": _make_bundles(rows, "M", text_feats, None)}
    cells = _run_cells(
        rows, bundles, ("M",), STRATEGIES, grid, seed, k_outer, k_inner, workers, dims
    )
    return ExperimentReport(
        experiment="experiment1",
        seed=seed,
        conditions=("M",),
        strategies=STRATEGIES,
        cells=cells,
        deltas={},
    )


def run_experiment2(
    ds: Dataset,
    av_features: Mapping[str, Mapping[str, np.ndarray]],
    grid: Mapping[str, Sequence],
    seed: int,
    extractor: TextFeatureExtractor | None = None,
    conditions: Sequence[str] = ("AV", "AVM", "AVdagger"),
    strategies: Sequence[str] = STRATEGIES,
    k_outer: int = 5,
    k_inner: int = 4,
    workers: int = 1,
    dims: Sequence[str] = DIMS,
) -> ExperimentReport:
    """Ablate audiovisual-only against audiovisual-plus-memory conditions."""
    validate_grid(grid)
    need_text = any(c in ("AVM", "M") for c in conditions)
    rows, text_feats = _subset_with_features(ds, extractor, need_text=need_text)
    missing = {r.video_id for r in rows} - set(av_features)
    if missing:
        raise ValueError(f"AV features missing for videos: {sorted(missing)}")
    bundles_by_condition = {
        cond: _make_bundles(rows, cond, text_feats, av_features)
        for cond in conditions
        if cond != "AVdagger"
    }
    cells = _run_cells(
        rows,
        bundles_by_condition,
        tuple(conditions),
        tuple(strategies),
        grid,
        seed,
        k_outer,
        k_inner,
        workers,
        dims,
    )
    deltas = {}
    if "AV" in conditions and "AVM" in conditions:
        for dim in dims:
            for strat in strategies:
                deltas[(dim, strat)] = (
                    cells[(dim, "AVM", strat)].mean_r2 - cells[(dim, "AV", strat)].mean_r2
                )
    return ExperimentReport(
        experiment="experiment2",
        seed=seed,
        conditions=tuple(conditions),
        strategies=tuple(strategies),
        cells=cells,
        deltas=deltas,
    )


# ---------------------------------------------------------------------------
# Annotator agreement


@dataclass(frozen=True)
class AgreementTable:
    correspondence: dict[str, float]  # dim -> pearson(mean(ann1, ann2), self)
    reliability: dict[str, float]     # dim -> pearson(ann1, ann2)

    def render_table(self) -> str:
        lines = [f"{'dim':4s}{'correspondence':>16s}{'reliability':>14s}"]
        for dim in DIMS:
            lines.append(
                f"{dim.upper():4s}{self.correspondence[dim]:>16.3f}"
                f"{self.reliability[dim]:>14.3f}"
            )
        return "\n".join(lines) + "\n"


def annotator_agreement(
    self_ma: np.ndarray, ann1: np.ndarray, ann2: np.ndarray
) -> AgreementTable:
    """Correspondence and reliability of two annotators against self reports.

    Inputs are aligned (n, 3) arrays of PAD ratings.
    """
    self_ma = np.atleast_2d(np.asarray(self_ma, dtype=float))
    ann1 = np.atleast_2d(np.asarray(ann1, dtype=float))
    ann2 = np.atleast_2d(np.asarray(ann2, dtype=float))
    if not (self_ma.shape == ann1.shape == ann2.shape) or self_ma.shape[1] != 3:
        raise ValueError("inputs must be aligned (n, 3) arrays")
    if self_ma.shape[0] < 3:
        raise ValueError("need at least three aligned records")
    correspondence = {}
    reliability = {}
    for col, dim in enumerate(DIMS):
        correspondence[dim] = pearson(
            0.5 * (ann1[:, col] + ann2[:, col]), self_ma[:, col]
        )
        reliability[dim] = pearson(ann1[:, col], ann2[:, col])
    return AgreementTable(correspondence=correspondence, reliability=reliability)
