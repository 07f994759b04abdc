import math

import numpy as np
import pytest

from memfuse.regressors import SvrParams, fit_svr, predict_svr, rbf_kernel, rbf_kernel_matrix

from .oracles import qp_oracle_svr_dual, svr_bias_from_beta, svr_dual_objective


def _full_beta(model, n):
    beta = np.zeros(n)
    beta[model.support_indices] = model.dual_coefs
    return beta


def test_rbf_self_is_one(rng):
    x = rng.normal(size=4)
    assert rbf_kernel(x, x, 0.7) == pytest.approx(1.0)


def test_rbf_hand_value():
    assert rbf_kernel(np.array([0.0, 0.0]), np.array([0.0, 1.0]), 1.0) == pytest.approx(
        math.exp(-1.0)
    )


def test_rbf_range_property(rng):
    for _ in range(20):
        x, z = rng.normal(size=3), rng.normal(size=3)
        v = rbf_kernel(x, z, float(rng.uniform(0.1, 3.0)))
        assert 0.0 < v <= 1.0


def test_rbf_dim_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        rbf_kernel(np.zeros(2), np.zeros(3), 1.0)


def test_constant_target_predicts_constant(rng):
    X = rng.normal(size=(12, 3))
    y = np.full(12, 0.37)
    model = fit_svr(X, y, SvrParams(c=1.0, epsilon=0.1))
    assert model.converged
    assert np.allclose(predict_svr(model, X), 0.37)


def test_line_fit_high_r2(rng):
    x = np.linspace(-1, 1, 20)
    y = 2 * x + 1
    model = fit_svr(x[:, None], y, SvrParams(c=100.0, epsilon=0.01))
    pred = predict_svr(model, x[:, None])
    ss_res = np.sum((y - pred) ** 2)
    ss_tot = np.sum((y - y.mean()) ** 2)
    assert 1 - ss_res / ss_tot >= 0.99


def test_non_finite_input_rejected(rng):
    X = rng.normal(size=(5, 2))
    y = rng.normal(size=5)
    X[2, 1] = np.nan
    with pytest.raises(ValueError, match="non-finite"):
        fit_svr(X, y, SvrParams())


def test_max_passes_flag(rng):
    X = rng.normal(size=(30, 2))
    y = rng.normal(size=30)
    model = fit_svr(X, y, SvrParams(c=10.0, epsilon=0.0, max_passes=2))
    assert not model.converged


def test_dual_feasibility_invariants(rng):
    for trial in range(8):
        n = int(rng.integers(10, 40))
        X = rng.normal(size=(n, int(rng.integers(1, 5))))
        y = rng.normal(size=n)
        params = SvrParams(c=float(rng.uniform(0.5, 20)), epsilon=float(rng.uniform(0, 0.3)))
        model = fit_svr(X, y, params)
        assert model.converged
        beta = _full_beta(model, n)
        assert np.all(np.abs(beta) <= params.c + 1e-12)
        assert abs(beta.sum()) <= 1e-6
        assert model.kkt_gap <= params.tol


def test_kkt_residuals_within_tol(rng):
    n = 30
    X = rng.normal(size=(n, 3))
    y = np.sin(X[:, 0]) + 0.1 * rng.normal(size=n)
    params = SvrParams(c=5.0, epsilon=0.05)
    model = fit_svr(X, y, params)
    assert model.converged
    beta = _full_beta(model, n)
    Xs = model.scaler.transform(X)
    K = rbf_kernel_matrix(Xs, Xs, model.params.gamma)
    grad = y - K @ beta
    eps, c, b = params.epsilon, params.c, model.bias
    up_val = grad - np.where(beta >= 0, eps, -eps)
    dn_val = grad - np.where(beta > 0, eps, -eps)
    res_up = np.where(beta < c, np.maximum(0.0, up_val - b), 0.0)
    res_dn = np.where(beta > -c, np.maximum(0.0, b - dn_val), 0.0)
    assert res_up.max() <= params.tol + 1e-9
    assert res_dn.max() <= params.tol + 1e-9


def test_interior_support_vector_within_epsilon(rng):
    n = 25
    X = rng.normal(size=(n, 2))
    y = X[:, 0] + 0.3 * rng.normal(size=n)
    params = SvrParams(c=10.0, epsilon=0.2)
    model = fit_svr(X, y, params)
    beta = _full_beta(model, n)
    pred = predict_svr(model, X)
    interior = (beta != 0) & (np.abs(beta) < params.c * (1 - 1e-9))
    for idx in np.flatnonzero(interior):
        assert abs(y[idx] - pred[idx]) <= params.epsilon + 2 * params.tol


def test_row_permutation_invariance(rng):
    n = 24
    X = rng.normal(size=(n, 3))
    y = X @ np.array([1.0, -0.5, 0.2]) + 0.1 * rng.normal(size=n)
    params = SvrParams(c=5.0, epsilon=0.05, tol=1e-7)
    base = predict_svr(fit_svr(X, y, params), X)
    perm = rng.permutation(n)
    permuted = predict_svr(fit_svr(X[perm], y[perm], params), X)
    assert np.max(np.abs(base - permuted)) < 1e-6


def test_predict_dim_mismatch(rng):
    X = rng.normal(size=(10, 3))
    y = rng.normal(size=10)
    model = fit_svr(X, y, SvrParams())
    with pytest.raises(ValueError, match="mismatch"):
        predict_svr(model, rng.normal(size=(4, 2)))


@pytest.mark.parametrize("trial", range(5))
def test_smo_matches_qp_oracle(trial, rng):
    rng = np.random.default_rng(900 + trial)
    n = int(rng.integers(10, 50))
    d = int(rng.integers(1, 6))
    X = rng.normal(size=(n, d))
    y = rng.normal(size=n)
    params = SvrParams(
        c=float(rng.uniform(0.5, 10.0)),
        epsilon=float(rng.uniform(0.0, 0.2)),
        tol=1e-4,
    )
    model = fit_svr(X, y, params)
    assert model.converged

    Xs = model.scaler.transform(X)
    K = rbf_kernel_matrix(Xs, Xs, model.params.gamma)
    beta_smo = _full_beta(model, n)
    beta_oracle = qp_oracle_svr_dual(K, y, params.c, params.epsilon)

    obj_smo = svr_dual_objective(K, y, beta_smo, params.epsilon)
    obj_oracle = svr_dual_objective(K, y, beta_oracle, params.epsilon)
    assert abs(obj_smo - obj_oracle) <= 1e-3

    bias_oracle = svr_bias_from_beta(K, y, beta_oracle, params.c, params.epsilon)
    X_test = rng.normal(size=(15, d))
    K_test = rbf_kernel_matrix(Xs, model.scaler.transform(X_test), model.params.gamma)
    pred_oracle = beta_oracle @ K_test + bias_oracle
    pred_smo = predict_svr(model, X_test)
    assert np.max(np.abs(pred_smo - pred_oracle)) <= 1e-3
