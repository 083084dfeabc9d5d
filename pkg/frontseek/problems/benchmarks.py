"""The six constrained two-objective test problems."""
from __future__ import annotations

import numpy as np

from frontseek.constants import OSY_REFERENCE_RESOLUTION, ProblemNames, RegressorKinds
from frontseek.ehvi.integrals import heaviside
from frontseek.problems.base import BenchmarkProblem

_R = 1 / np.sqrt(2)


class BNH(BenchmarkProblem):
    name = ProblemNames.BNH
    bounds_pairs = [(-5, 15), (-10, 10)]
    initial_pairs = [(0, 5), (-5, 0)]
    y_ref = (200.0, 50.0)
    weights = (0.0, 1.0, 0.0)
    epsilon, gamma, sigma_ref = 0.0, 10.0, 1.0

    def _objectives(self, X):
        x1, x2 = X[:, 0], X[:, 1]
        return np.column_stack((4 * x1**2 + 4 * x2**2, (x1 - 5) ** 2 + (x2 - 5) ** 2))

    def _constraints(self, X):
        x1, x2 = X[:, 0], X[:, 1]
        return np.column_stack(
            ((x1 - 5) ** 2 + x2**2 - 25, -((x1 - 8) ** 2) - (x2 + 3) ** 2 + 7.7)
        )


class SRN(BenchmarkProblem):
    name = ProblemNames.SRN
    bounds_pairs = [(-20, 20), (-20, 20)]
    initial_pairs = [(0, 20), (0, 20)]
    y_ref = (250.0, 50.0)
    weights = (0.0, 1.0, 0.0)
    epsilon, gamma, sigma_ref = 0.0, 10.0, 1.0

    def _objectives(self, X):
        x1, x2 = X[:, 0], X[:, 1]
        return np.column_stack(
            (2 + (x1 - 2) ** 2 + (x2 - 1) ** 2, 9 * x1 - (x2 - 1) ** 2)
        )

    def _constraints(self, X):
        x1, x2 = X[:, 0], X[:, 1]
        return np.column_stack((x1**2 + x2**2 - 255, x1 - 3 * x2 + 10))


class OSY(BenchmarkProblem):
    name = ProblemNames.OSY
    bounds_pairs = [(0, 10), (0, 10), (1, 5), (0, 6), (1, 5), (0, 10)]
    initial_pairs = [(2, 4), (0, 3), (2, 4), (0, 2), (1, 2), (0, 10)]
    n0 = 100
    y_ref = (0.0, 80.0)
    weights = (0.0, 1.0, 0.0)
    epsilon, gamma, sigma_ref = 0.0, 200.0, 5.0
    regressor = RegressorKinds.BAYES_RIDGE_POLY
    reference_resolution = OSY_REFERENCE_RESOLUTION

    def _objectives(self, X):
        x1, x2, x3, x4, x5, _ = X.T
        y1 = (
            -25 * (x1 - 2) ** 2
            - (x2 - 2) ** 2
            - (x3 - 1) ** 2
            - (x4 - 4) ** 2
            - (x5 - 1) ** 2
        )
        return np.column_stack((y1, np.sum(X**2, axis=1)))

    def _constraints(self, X):
        x1, x2, x3, x4, x5, x6 = X.T
        return np.column_stack(
            (
                -x1 - x2 + 2,
                x1 + x2 - 6,
                x2 - x1 - 2,
                x1 - 3 * x2 - 2,
                (x3 - 3) ** 2 + x4 - 4,
                -((x5 - 3) ** 2) - x6 + 4,
            )
        )


class CEX(BenchmarkProblem):
    name = ProblemNames.CEX
    bounds_pairs = [(0.1, 1), (0, 5)]
    initial_pairs = [(0.1, 1), (0.5, 2.5)]
    y_ref = (1.0, 9.0)
    weights = (1.0, 3.0, 1.0)
    epsilon, gamma, sigma_ref = 1.0, 1.0, 1.5
    regressor = RegressorKinds.BAYES_RIDGE_POLY

    def _objectives(self, X):
        x1, x2 = X[:, 0], X[:, 1]
        return np.column_stack((x1, (x2 + 1) / x1))

    def _constraints(self, X):
        x1, x2 = X[:, 0], X[:, 1]
        return np.column_stack(
            (-9 * x1 - x2 + 6, -9 * x1 + x2 + 1, 0.8 - x1, x1 - 2 / 3)
        )


class FFF(BenchmarkProblem):
    name = ProblemNames.FFF
    bounds_pairs = [(-1, 1), (-1, 1)]
    initial_pairs = [(0.25, 1), (0.25, 1)]
    y_ref = (1.0, 1.0)
    weights = (1.0, 2.0, 1.0)
    epsilon, gamma, sigma_ref = 1.0, 10.0, 1.0

    def _objectives(self, X):
        x1, x2 = X[:, 0], X[:, 1]
        return np.column_stack(
            (
                1 - np.exp(-((x1 - _R) ** 2) - (x2 - _R) ** 2),
                1 - np.exp(-((x1 + _R) ** 2) - (x2 + _R) ** 2),
            )
        )

    def _constraints(self, X):
        Y = self._objectives(X)
        x1, x2 = X[:, 0], X[:, 1]
        return np.column_stack(
            (
                x1**2 + x2**2 - 0.5,
                np.minimum(Y[:, 0] - 0.4, 0.6 - Y[:, 0]),
                np.minimum(Y[:, 1] - 0.4, 0.6 - Y[:, 1]),
            )
        )


class CIR(BenchmarkProblem):
    name = ProblemNames.CIR
    bounds_pairs = [(-2, 2), (-2, 2)]
    initial_pairs = [(0.5, 1.5), (-0.5, 0.5)]
    y_ref = (0.0, 0.0)
    weights = (1.0, 1.0, 1.0)
    epsilon, gamma, sigma_ref = 1.0, 1.0, 1.0

    def _objectives(self, X):
        x1, x2 = X[:, 0], X[:, 1]
        return np.column_stack(
            (
                -((0.5 * heaviside(x2 - x1) + x1) ** 2),
                -((0.5 * heaviside(x1 - x2) + x2) ** 2),
            )
        )

    def _constraints(self, X):
        x1, x2 = X[:, 0], X[:, 1]
        return np.minimum(
            (x1 - 1) ** 2 + x2**2 - 0.25, x1**2 + (x2 - 1) ** 2 - 0.25
        )[:, None]


PROBLEMS = {cls.name: cls for cls in (BNH, SRN, OSY, CEX, FFF, CIR)}
