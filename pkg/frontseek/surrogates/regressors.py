"""
Objective regressors. Each objective gets its own model, trained on inputs
scaled to the unit cube and standardized targets, so the predictive density is
separable across objectives.
"""
from __future__ import annotations

import logging
from typing import Callable, Dict, List, Optional

import numpy as np
from scipy.optimize import minimize
from sklearn.gaussian_process import GaussianProcessRegressor
from sklearn.gaussian_process.kernels import ConstantKernel, Matern
from sklearn.linear_model import BayesianRidge
from sklearn.pipeline import Pipeline
from sklearn.preprocessing import PolynomialFeatures

from frontseek.constants import (
    GP_JITTER,
    GP_RESTARTS,
    POLY_DEGREE,
    RIDGE_MAX_ITER,
    RIDGE_TOL,
    RegressorKinds,
)
from frontseek.core.data import Bounds
from frontseek.decorators import timed
from frontseek.errors import ContractViolation, NotEnoughData
from frontseek.surrogates.base import Regressor

logger = logging.getLogger(__name__)

_MAX_JITTER = 1e-4


def _powell(obj_func, initial_theta, bounds):
    """Gradient-free marginal-likelihood search used in place of L-BFGS-B."""
    result = minimize(
        lambda theta: obj_func(theta, eval_gradient=False),
        initial_theta,
        method='Powell',
        bounds=bounds,
        options={'xtol': 1e-4, 'ftol': 1e-8, 'maxfev': 2000},
    )
    return result.x, result.fun


def _gp_model(d: int, jitter: float, restarts: int, seed: int) -> GaussianProcessRegressor:
    kernel = ConstantKernel(1.0, (1e-3, 1e3)) * Matern(
        length_scale=np.ones(d), length_scale_bounds=(1e-3, 1e3), nu=2.5
    )
    return GaussianProcessRegressor(
        kernel=kernel,
        alpha=jitter,
        optimizer=_powell,
        n_restarts_optimizer=max(restarts - 1, 0),
        normalize_y=False,
        random_state=seed,
    )


def _ridge_model(degree: int, max_iter: int, tol: float) -> Pipeline:
    return Pipeline(
        [
            ('features', PolynomialFeatures(degree=degree)),
            ('ridge', BayesianRidge(max_iter=max_iter, tol=tol, fit_intercept=True)),
        ]
    )


class StandardizedRegressor(Regressor):
    """
    One model per objective on standardized data; predictions are mapped back
    to objective units.
    """

    def __init__(self, kind: str, bounds: Bounds, models: List, y_mean, y_scale):
        self.kind = kind
        self.bounds = bounds
        self.models = models
        self.y_mean = np.asarray(y_mean, dtype=float)
        self.y_scale = np.asarray(y_scale, dtype=float)
        self.n_objectives = len(models)

    def predict_batch(self, X):
        U = self.bounds.scale(np.atleast_2d(np.asarray(X, dtype=float)))
        mu = np.empty((len(U), self.n_objectives))
        sigma = np.empty_like(mu)
        for i, model in enumerate(self.models):
            mean, std = model.predict(U, return_std=True)
            mu[:, i] = self.y_mean[i] + self.y_scale[i] * mean
            sigma[:, i] = self.y_scale[i] * np.clip(std, 0.0, None)
        return mu, sigma

    def prior_std(self) -> np.ndarray:
        """Per-objective prior standard deviation of a fitted GP, in objective units."""
        if self.kind != RegressorKinds.GP_MATERN:
            raise ContractViolation('prior standard deviation is defined for GP models only')
        return np.array(
            [
                self.y_scale[i] * np.sqrt(model.kernel_.k1.constant_value)
                for i, model in enumerate(self.models)
            ]
        )


def _fit_gp(U: np.ndarray, z: np.ndarray, jitter: float, restarts: int, seed: int):
    while True:
        model = _gp_model(U.shape[1], jitter, restarts, seed)
        try:
            return model.fit(U, z)
        except np.linalg.LinAlgError:
            if jitter >= _MAX_JITTER:
                raise
            jitter *= 100
            logger.warning(f'GP kernel matrix not positive definite, raising jitter to {jitter:g}')


def _fit_ridge(U: np.ndarray, z: np.ndarray, degree: int, max_iter: int, tol: float):
    return _ridge_model(degree, max_iter, tol).fit(U, z)


@timed
def fit_regressor(
    X,
    Y,
    kind: str = RegressorKinds.GP_MATERN,
    bounds: Optional[Bounds] = None,
    jitter: float = GP_JITTER,
    restarts: int = GP_RESTARTS,
    degree: int = POLY_DEGREE,
    max_iter: int = RIDGE_MAX_ITER,
    tol: float = RIDGE_TOL,
    seed: int = 0,
) -> StandardizedRegressor:
    """
    Fits one regressor per objective on D_xy* given as design matrix `X`
    (k, d) and objective matrix `Y` (k, n).
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    Y = np.asarray(Y, dtype=float).reshape(len(X), -1)
    if len(X) < 2:
        raise NotEnoughData(f'regression needs at least 2 feasible samples, got {len(X)}')
    if kind not in list(RegressorKinds()):
        raise ContractViolation(f'unknown regressor kind {kind!r}')
    if bounds is None:
        lower, upper = X.min(axis=0), X.max(axis=0)
        bounds = Bounds(lower, np.where(upper > lower, upper, lower + 1.0))
    U = bounds.scale(bounds.check(X))

    y_mean = Y.mean(axis=0)
    y_scale = Y.std(axis=0)
    y_scale = np.where(y_scale > 0, y_scale, 1.0)
    Z = (Y - y_mean) / y_scale

    fitters: Dict[str, Callable] = {
        RegressorKinds.GP_MATERN: lambda z: _fit_gp(U, z, jitter, restarts, seed),
        RegressorKinds.BAYES_RIDGE_POLY: lambda z: _fit_ridge(U, z, degree, max_iter, tol),
    }
    models = [fitters[kind](Z[:, i]) for i in range(Z.shape[1])]
    return StandardizedRegressor(kind, bounds, models, y_mean, y_scale)
