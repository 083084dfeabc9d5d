"""
The acquisition function: a weighted mean of the optimization,
constraint-finding and explorative utilities, evaluated in batches.
"""
from __future__ import annotations

import logging
from typing import Dict, Optional

import numpy as np

from frontseek.acquisition.utilities import (
    Metric,
    Repulsion,
    binary_entropy,
    p_nondominated_batch,
    relative_volume_gamma,
)
from frontseek.core.data import Bounds, Dataset
from frontseek.core.dominance import pareto_subset
from frontseek.ehvi.expected import SectorDecomposition
from frontseek.ehvi.truncation import intersection_mask
from frontseek.errors import ContractViolation
from frontseek.frontseek_dataclasses import AcquisitionConfig
from frontseek.surrogates.base import Classifier, Regressor

logger = logging.getLogger(__name__)

U_OPT, U_CON, U_EXP = 'u_opt', 'u_con', 'u_exp'


class AcquisitionFunction:
    """
    Acquisition function for a fixed model pair and working data set.

    `X` holds the explored (and fantasy) design points, `Y_star` the feasible
    (and accepted fantasy) objective vectors. Without a fitted regressor or a
    feasible point the optimization utility is 0 and every prediction counts
    as non-dominated.
    """

    def __init__(
        self,
        classifier: Classifier,
        regressor: Optional[Regressor],
        X,
        Y_star,
        cfg: AcquisitionConfig,
        bounds: Bounds,
        metric: Optional[Metric] = None,
    ):
        self.classifier = classifier
        self.regressor = regressor
        self.cfg = cfg
        self.bounds = bounds
        self.ref = np.asarray(cfg.y_ref, dtype=float)
        self.w_opt, self.w_con, self.w_exp = cfg.weights.as_tuple()
        if cfg.weights.norm <= 0:
            raise ContractViolation('acquisition weights must not all be zero')

        Y_star = np.asarray(Y_star, dtype=float).reshape(-1, self.ref.size)
        self.front = pareto_subset(Y_star) if len(Y_star) else Y_star
        self._has_front = regressor is not None and len(self.front) > 0

        self._decomposition = None
        self._gamma_rel = None
        if self.w_opt > 0 and self._has_front:
            self._decomposition = SectorDecomposition(self.front, self.ref)
            self._gamma_rel = relative_volume_gamma(self.front, self.ref)
        self._repulsion = (
            Repulsion(X, cfg.epsilon, bounds, metric) if self.w_exp > 0 else None
        )

    def _predict(self, X):
        return self.regressor.predict_batch(X)

    def components(self, X) -> Dict[str, np.ndarray]:
        """Every utility with a nonzero weight, plus the shared factors."""
        X = np.atleast_2d(np.asarray(X, dtype=float))
        m = len(X)
        p_feasible = self.classifier.predict_feasible_batch(X)
        out = {'p_feasible': p_feasible}

        if self._has_front:
            mu, sigma = self._predict(X)
            p_nd = p_nondominated_batch(self.front, mu, sigma)
        else:
            mu = sigma = None
            p_nd = np.ones(m)
        out['p_nondominated'] = p_nd

        if self.w_opt > 0:
            if self._decomposition is None:
                out[U_OPT] = np.zeros(m)
            else:
                mask = intersection_mask(self._decomposition, mu, sigma, self.cfg.sigma_ref)
                evi = self._decomposition.expected_improvement(mu, sigma, mask)
                out['evi'] = evi
                out[U_OPT] = p_feasible * -np.expm1(-self.cfg.gamma * evi / self._gamma_rel)
        if self.w_con > 0:
            out[U_CON] = p_nd * binary_entropy(np.clip(p_feasible, 0.0, 1.0))
        if self.w_exp > 0:
            out[U_EXP] = p_nd * self._repulsion(X)
        return out

    def evaluate(self, X) -> np.ndarray:
        parts = self.components(X)
        total = np.zeros(len(parts['p_feasible']))
        for weight, key in ((self.w_opt, U_OPT), (self.w_con, U_CON), (self.w_exp, U_EXP)):
            if weight > 0:
                total += weight * parts[key]
        return np.clip(total / self.cfg.weights.norm, 0.0, 1.0)

    def __call__(self, x) -> float:
        return float(self.evaluate(np.atleast_2d(x))[0])


def build_acquisition(
    classifier: Classifier,
    regressor: Optional[Regressor],
    D: Dataset,
    cfg: AcquisitionConfig,
    bounds: Bounds,
    metric: Optional[Metric] = None,
) -> AcquisitionFunction:
    return AcquisitionFunction(classifier, regressor, D.x, D.y_star, cfg, bounds, metric)
