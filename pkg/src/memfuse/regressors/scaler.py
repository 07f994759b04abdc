"""Per-feature standardization, fit on training data only.

Each model owns its scaler, so test-time inputs can never leak into the
standardization statistics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Scaler:
    means: np.ndarray
    stds: np.ndarray

    @classmethod
    def fit(cls, X: np.ndarray) -> "Scaler":
        X = np.asarray(X, dtype=float)
        means = X.mean(axis=0)
        stds = X.std(axis=0)
        stds = np.where(stds == 0.0, 1.0, stds)
        return cls(means=means, stds=stds)

    def transform(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if X.shape[-1] != self.means.shape[0]:
            raise ValueError(
                f"feature dimension mismatch: expected {self.means.shape[0]}, "
                f"got {X.shape[-1]}"
            )
        return (X - self.means) / self.stds

    def to_json(self) -> dict:
        return {"means": self.means.tolist(), "stds": self.stds.tolist()}

    @classmethod
    def from_json(cls, doc: dict) -> "Scaler":
        return cls(
            means=np.asarray(doc["means"], dtype=float),
            stds=np.asarray(doc["stds"], dtype=float),
        )
