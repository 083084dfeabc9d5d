from __future__ import annotations

import abc
import dataclasses

import numpy as np

from frontseek.constants import DIRAC_SIGMA
from frontseek.errors import ContractViolation


@dataclasses.dataclass(frozen=True)
class NormalPrediction:
    """
    Separable normal predictive density of the objectives at one design vector.

    Fields
    ------
    mu : mean per objective.
    sigma : standard deviation per objective; zero entries select the Dirac limits.
    """

    mu: np.ndarray
    sigma: np.ndarray

    def __post_init__(self):
        mu = np.asarray(self.mu, dtype=float).reshape(-1)
        sigma = np.asarray(self.sigma, dtype=float).reshape(-1)
        if mu.shape != sigma.shape:
            raise ContractViolation(
                f'prediction has {mu.size} means and {sigma.size} deviations'
            )
        if np.any(sigma < 0) or not np.all(np.isfinite(mu)):
            raise ContractViolation('prediction needs finite means and sigma >= 0')
        object.__setattr__(self, 'mu', mu)
        object.__setattr__(self, 'sigma', sigma)

    @property
    def n_objectives(self) -> int:
        return self.mu.size

    def log_density(self, y) -> float:
        """
        Joint log-density, the sum of the per-objective normal log-densities.
        An objective with a Dirac prediction adds 0 at its mean and -inf elsewhere.
        """
        y = np.asarray(y, dtype=float)
        dirac = self.sigma <= DIRAC_SIGMA
        sigma = np.where(dirac, 1.0, self.sigma)
        normal = -0.5 * ((y - self.mu) / sigma) ** 2 - np.log(sigma * np.sqrt(2 * np.pi))
        point = np.where(y == self.mu, 0.0, -np.inf)
        return float(np.sum(np.where(dirac, point, normal)))


class Regressor(abc.ABC):
    """Probabilistic regression of the objectives, trained on D_xy*."""

    n_objectives: int

    @abc.abstractmethod
    def predict_batch(self, X) -> tuple:
        """Means and standard deviations for the rows of `X`, each of shape (m, n)."""

    def predict(self, x) -> NormalPrediction:
        mu, sigma = self.predict_batch(np.atleast_2d(np.asarray(x, dtype=float)))
        return NormalPrediction(mu[0], sigma[0])


class Classifier(abc.ABC):
    """Probabilistic feasibility classification, trained on D_xf."""

    @abc.abstractmethod
    def predict_feasible_batch(self, X) -> np.ndarray:
        """Probability of feasibility for the rows of `X`, shape (m,)."""

    def predict_feasible(self, x) -> float:
        return float(self.predict_feasible_batch(np.atleast_2d(np.asarray(x, dtype=float)))[0])
