"""Group-aware fold assignment primitives.

Folds partition *groups* (participants), never rows, so one person's
responses always travel together. Assignment is a seeded shuffle of the
sorted group ids followed by round-robin dealing, which keeps fold sizes
within one group of each other.
"""

from __future__ import annotations

from typing import Hashable, Sequence

import numpy as np

__all__ = ["assign_group_folds", "grouped_test_indices"]


def assign_group_folds(
    group_ids: Sequence[Hashable], k: int, seed: int
) -> dict[Hashable, int]:
    """Deterministically assign each distinct group id to one of k folds."""
    distinct = sorted(set(group_ids), key=str)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > len(distinct):
        raise ValueError(f"k={k} exceeds number of groups ({len(distinct)})")
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(distinct))
    return {distinct[int(idx)]: pos % k for pos, idx in enumerate(order)}


def grouped_test_indices(
    groups: Sequence[Hashable], k: int, seed: int
) -> list[np.ndarray]:
    """Row indices of each fold's test block, grouped by `groups`."""
    assignment = assign_group_folds(groups, k, seed)
    labels = np.array([assignment[g] for g in groups])
    return [np.flatnonzero(labels == fold) for fold in range(k)]
