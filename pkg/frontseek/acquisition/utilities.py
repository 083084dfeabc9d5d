"""
Building blocks of the acquisition function: relative volume, non-domination
probability, binary entropy and the distance-based repulsion.
"""
from __future__ import annotations

from typing import Callable, Optional

import numpy as np

from frontseek.constants import DIAMETER_RANDOM_PAIRS, GAMMA_FLOOR
from frontseek.core.data import Bounds
from frontseek.core.dominance import pareto_subset
from frontseek.ehvi.integrals import prob_at_least
from frontseek.errors import ContractViolation, EmptyParetoSet

Metric = Callable[[np.ndarray, np.ndarray], np.ndarray]


def relative_volume_gamma(D_y_star, ref) -> float:
    """Product over objectives of the widest gap between the front and `ref`."""
    ref = np.asarray(ref, dtype=float).reshape(-1)
    Y = np.asarray(D_y_star, dtype=float)
    if Y.size == 0:
        raise EmptyParetoSet('relative volume needs at least one feasible objective vector')
    P = pareto_subset(Y.reshape(-1, ref.size))
    spans = np.clip(np.max(ref - P, axis=0), 0.0, None)
    return float(max(np.prod(spans), GAMMA_FLOOR))


def p_nondominated_batch(P, mu, sigma) -> np.ndarray:
    """
    Product over the front of the probability that the prediction is not
    weakly dominated by that front point, for every row of `mu`/`sigma`.
    """
    mu = np.atleast_2d(np.asarray(mu, dtype=float))
    sigma = np.atleast_2d(np.asarray(sigma, dtype=float))
    P = np.asarray(P, dtype=float)
    if P.size == 0:
        return np.ones(len(mu))
    P = P.reshape(-1, mu.shape[1])
    dominated = np.prod(
        np.asarray(prob_at_least(P[None, :, :], mu[:, None, :], sigma[:, None, :])), axis=2
    )
    return np.clip(np.prod(1.0 - dominated, axis=1), 0.0, 1.0)


def binary_entropy(p):
    """Shannon entropy of a binary event in bits, with 0 ln 0 = 0."""
    p = np.asarray(p, dtype=float)
    if np.any((p < 0) | (p > 1)) or np.any(np.isnan(p)):
        raise ContractViolation('probabilities must lie in [0, 1]')
    with np.errstate(divide='ignore', invalid='ignore'):
        terms = -np.where(p > 0, p * np.log(p), 0.0) - np.where(
            p < 1, (1 - p) * np.log1p(-p), 0.0
        )
    value = np.clip(terms / np.log(2.0), 0.0, 1.0)
    return float(value) if value.ndim == 0 else value


def distance_metric(x1, x2, epsilon: float, bounds: Bounds):
    """Exponential-kernel distance of the unit-cube images of `x1` and `x2`."""
    if epsilon < 0:
        raise ContractViolation(f'epsilon must be nonnegative, got {epsilon}')
    u1, u2 = bounds.scale(x1), bounds.scale(x2)
    value = -np.expm1(-epsilon * np.sum((u1 - u2) ** 2, axis=-1))
    return float(value) if np.ndim(value) == 0 else value


def metric_diameter(
    metric: Metric, bounds: Bounds, rng: Optional[np.random.Generator] = None
) -> float:
    """
    Largest distance between two points of the box, estimated from the
    opposite-corner pairs and a batch of random pairs.
    """
    rng = rng or np.random.default_rng(0)
    d = bounds.dim
    corners = ((np.arange(2**d)[:, None] >> np.arange(d)[None, :]) & 1).astype(float)
    lows = bounds.unscale(corners)
    highs = bounds.unscale(1.0 - corners)
    pairs_a = np.vstack([lows, bounds.sample_uniform(rng, DIAMETER_RANDOM_PAIRS)])
    pairs_b = np.vstack([highs, bounds.sample_uniform(rng, DIAMETER_RANDOM_PAIRS)])
    return float(np.max(metric(pairs_a, pairs_b)))


class Repulsion:
    """
    Normalized repulsion from the explored design points. The built-in metric
    has the diameter 1 - exp(-epsilon d); custom metrics get a sampled one.
    """

    def __init__(
        self,
        D_x,
        epsilon: float,
        bounds: Bounds,
        metric: Optional[Metric] = None,
        rng: Optional[np.random.Generator] = None,
    ):
        D_x = np.asarray(D_x, dtype=float)
        if D_x.size == 0:
            raise ContractViolation('repulsion needs at least one explored design point')
        self.D_x = D_x.reshape(-1, bounds.dim)
        self.bounds = bounds
        self.epsilon = epsilon
        if metric is None:
            self.metric = lambda a, b: distance_metric(a, b, epsilon, bounds)
            self.diameter = float(-np.expm1(-epsilon * bounds.dim))
        else:
            self.metric = metric
            self.diameter = metric_diameter(metric, bounds, rng)

    def __call__(self, X) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=float))
        if self.diameter <= 0:
            return np.zeros(len(X))
        distances = np.asarray(self.metric(X[:, None, :], self.D_x[None, :, :]))
        return np.clip(distances.min(axis=1) / self.diameter, 0.0, 1.0)


def repulsion(D_x, epsilon: float, x, bounds: Bounds, metric: Optional[Metric] = None) -> float:
    return float(Repulsion(D_x, epsilon, bounds, metric)(x)[0])
