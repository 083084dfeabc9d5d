from __future__ import annotations

import abc
from typing import ClassVar, Sequence, Tuple

import numpy as np

from frontseek.constants import DEFAULT_REFERENCE_RESOLUTION, RegressorKinds
from frontseek.core.data import Bounds, Sample
from frontseek.frontseek_dataclasses import AcquisitionConfig, AcquisitionWeights


class BenchmarkProblem(abc.ABC):
    """
    Constrained multi-objective test problem with a binary feasibility signal:
    a design is feasible iff every constraint value is <= 0.

    Subclasses define the box, the initial sampling box, the reference point,
    the default acquisition parameters and the vectorized `_objectives` and
    `_constraints`.
    """

    name: ClassVar[str]
    bounds_pairs: ClassVar[Sequence[Tuple[float, float]]]
    initial_pairs: ClassVar[Sequence[Tuple[float, float]]]
    n0: ClassVar[int] = 10
    y_ref: ClassVar[Tuple[float, ...]]
    weights: ClassVar[Tuple[float, float, float]]
    epsilon: ClassVar[float]
    gamma: ClassVar[float]
    sigma_ref: ClassVar[float]
    regressor: ClassVar[str] = RegressorKinds.GP_MATERN
    reference_resolution: ClassVar[int] = DEFAULT_REFERENCE_RESOLUTION

    def __init__(self):
        self.bounds = Bounds.from_pairs(self.bounds_pairs)
        self.initial_bounds = Bounds.from_pairs(self.initial_pairs)

    @property
    def d(self) -> int:
        return self.bounds.dim

    @property
    def n_objectives(self) -> int:
        return len(self.y_ref)

    @property
    def n_constraints(self) -> int:
        return self._constraints(self.bounds.lower[None, :]).shape[1]

    @abc.abstractmethod
    def _objectives(self, X: np.ndarray) -> np.ndarray:
        """Objective matrix (m, n) for the design matrix `X` (m, d)."""

    @abc.abstractmethod
    def _constraints(self, X: np.ndarray) -> np.ndarray:
        """Constraint matrix (m, constraints) for the design matrix `X` (m, d)."""

    def objectives(self, X) -> np.ndarray:
        return self._objectives(np.atleast_2d(np.asarray(X, dtype=float)))

    def constraints(self, X) -> np.ndarray:
        return self._constraints(np.atleast_2d(np.asarray(X, dtype=float)))

    def feasible(self, X) -> np.ndarray:
        return np.all(self.constraints(X) <= 0, axis=1)

    def evaluate_batch(self, X) -> Tuple[np.ndarray, np.ndarray]:
        X = np.atleast_2d(np.asarray(X, dtype=float))
        return self._objectives(X), self.feasible(X)

    def evaluate(self, x) -> Sample:
        x = self.bounds.check(np.asarray(x, dtype=float).reshape(-1))
        Y, F = self.evaluate_batch(x[None, :])
        return Sample.make(x, Y[0], bool(F[0]))

    def default_acquisition(self, n_seq: int = 1) -> AcquisitionConfig:
        return AcquisitionConfig(
            weights=AcquisitionWeights.of(*self.weights),
            gamma=self.gamma,
            sigma_ref=self.sigma_ref,
            epsilon=self.epsilon,
            y_ref=list(self.y_ref),
            n_seq=n_seq,
        )

    def describe(self) -> dict:
        return {
            'name': self.name,
            'd': self.d,
            'n': self.n_objectives,
            'm': self.n_constraints,
            'bounds': self.bounds.as_pairs(),
            'initial_bounds': self.initial_bounds.as_pairs(),
            'n0': self.n0,
            'y_ref': list(self.y_ref),
            'weights': list(self.weights),
            'epsilon': self.epsilon,
            'gamma': self.gamma,
            'sigma_ref': self.sigma_ref,
            'regressor': self.regressor,
        }

    def __repr__(self):
        return f'{type(self).__name__}(d={self.d}, n={self.n_objectives})'
