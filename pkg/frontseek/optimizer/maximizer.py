"""
Global maximization of an acquisition function on a box: differential
evolution on the unit cube, restarted a few times, then a bound-constrained
quasi-Newton polish of the best incumbent.
"""
from __future__ import annotations

import logging
from typing import Callable, Optional

import numpy as np
from scipy.optimize import differential_evolution, minimize

from frontseek.core.data import Bounds
from frontseek.decorators import timed
from frontseek.frontseek_dataclasses import MaximizerConfig

logger = logging.getLogger(__name__)


def _batched(af) -> Callable[[np.ndarray], np.ndarray]:
    if hasattr(af, 'evaluate'):
        return af.evaluate
    return lambda X: np.array([af(x) for x in X], dtype=float)


@timed
def maximize_acquisition(
    af,
    bounds: Bounds,
    cfg: Optional[MaximizerConfig] = None,
    rng: Optional[np.random.Generator] = None,
) -> np.ndarray:
    """
    Best design vector found for `af`, which maps a design vector to a real
    (objects with a batched `evaluate` are used through it).
    """
    cfg = cfg or MaximizerConfig()
    rng = rng if rng is not None else np.random.default_rng()
    batch = _batched(af)
    d = bounds.dim

    def negated(U):
        # scipy hands over the population as (d, S)
        U = np.atleast_2d(U.T if U.ndim == 2 else U[None, :])
        return -batch(bounds.unscale(np.clip(U, 0.0, 1.0)))

    popsize = max(1, min(cfg.population_per_dim * d, cfg.max_population) // d)
    best_u, best_value, nfev = None, np.inf, 0
    for _ in range(1 + cfg.restarts):
        result = differential_evolution(
            negated,
            bounds=[(0.0, 1.0)] * d,
            strategy=cfg.strategy,
            maxiter=cfg.generations,
            popsize=popsize,
            mutation=cfg.mutation,
            recombination=cfg.recombination,
            seed=rng,
            polish=False,
            init='latinhypercube',
            updating='deferred',
            vectorized=True,
        )
        nfev += result.nfev
        if best_u is None or result.fun < best_value:
            best_u, best_value = np.clip(result.x, 0.0, 1.0), float(result.fun)

    if cfg.polish_maxfun > 0:
        polished = minimize(
            lambda u: float(negated(np.asarray(u))[0]),
            best_u,
            method='L-BFGS-B',
            jac='3-point',
            bounds=[(0.0, 1.0)] * d,
            options={'maxfun': cfg.polish_maxfun, 'finite_diff_rel_step': cfg.polish_eps},
        )
        polished_u = np.clip(polished.x, 0.0, 1.0)
        polished_value = float(negated(polished_u)[0])
        if polished_value < best_value:
            best_u, best_value = polished_u, polished_value

    logger.debug(f'acquisition maximum {-best_value:.6g} after {nfev} DE evaluations')
    return np.clip(bounds.unscale(best_u), bounds.lower, bounds.upper)
