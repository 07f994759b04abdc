import numpy as np
import pytest

from memfuse.regressors import Scaler, fit_ridge, predict_ridge

from .oracles import ridge_normal_equations


def test_scaler_standardizes_training_data(rng):
    X = rng.normal(loc=3.0, scale=2.5, size=(40, 4))
    X[:, 2] = 7.0  # constant column
    scaler = Scaler.fit(X)
    Xs = scaler.transform(X)
    assert np.all(np.abs(Xs.mean(axis=0)) < 1e-9)
    stds = Xs.std(axis=0)
    assert np.allclose(stds[[0, 1, 3]], 1.0)
    assert stds[2] == 0.0  # constant column maps to zeros


def test_scaler_dim_mismatch(rng):
    scaler = Scaler.fit(rng.normal(size=(10, 3)))
    with pytest.raises(ValueError, match="mismatch"):
        scaler.transform(rng.normal(size=(5, 2)))


def test_exact_line_recovers_slope():
    x = np.arange(10.0)
    y = 2.0 * x
    model = fit_ridge(x[:, None], y, alpha=0.0)
    assert model.weights[0] == pytest.approx(2.0, abs=1e-10)
    assert model.intercept == pytest.approx(0.0, abs=1e-9)
    assert np.allclose(predict_ridge(model, x[:, None]), y)


def test_large_alpha_collapses_to_mean(rng):
    X = rng.normal(size=(30, 4))
    y = rng.normal(size=30)
    model = fit_ridge(X, y, alpha=1e9)
    pred = predict_ridge(model, X)
    assert np.max(np.abs(pred - y.mean())) < 1e-3


def test_matches_normal_equation_oracle(rng):
    for _ in range(20):
        X = rng.normal(size=(20, 5))
        y = rng.normal(size=20)
        alpha = float(rng.uniform(0.01, 10.0))
        model = fit_ridge(X, y, alpha)
        w_ref, b_ref = ridge_normal_equations(X, y, alpha)
        assert np.max(np.abs(model.weights - w_ref)) < 1e-8
        assert abs(model.intercept - b_ref) < 1e-8


def test_singular_at_zero_alpha(rng):
    X = rng.normal(size=(10, 3))
    X[:, 2] = X[:, 1]  # exact collinearity
    y = rng.normal(size=10)
    with pytest.raises(ValueError, match="alpha > 0"):
        fit_ridge(X, y, alpha=0.0)


def test_objective_at_solution_beats_perturbations(rng):
    X = rng.normal(size=(25, 4))
    y = X @ np.array([0.5, -1.0, 0.2, 0.0]) + 0.2 * rng.normal(size=25)
    alpha = 2.0
    model = fit_ridge(X, y, alpha)
    scaler = model.scaler
    Xs = scaler.transform(X)
    yc = y - y.mean()
    w_star = model.weights * scaler.stds

    def objective(w):
        resid = yc - Xs @ w
        return resid @ resid + alpha * (w @ w)

    best = objective(w_star)
    for _ in range(100):
        assert best <= objective(w_star + rng.normal(scale=0.05, size=4)) + 1e-12


def test_row_permutation_invariance(rng):
    X = rng.normal(size=(20, 3))
    y = rng.normal(size=20)
    model = fit_ridge(X, y, 1.0)
    perm = rng.permutation(20)
    permuted = fit_ridge(X[perm], y[perm], 1.0)
    assert np.max(np.abs(predict_ridge(model, X) - predict_ridge(permuted, X))) < 1e-6


def test_negative_alpha_rejected(rng):
    with pytest.raises(ValueError, match="non-negative"):
        fit_ridge(rng.normal(size=(5, 2)), rng.normal(size=5), -1.0)
