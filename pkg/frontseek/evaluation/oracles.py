"""
Independent reference computations for the closed forms: Monte-Carlo
estimates over the predictive density, adaptive quadrature of the Gaussian
moment integrals and sampling checks of hypervolume and ellipsoid
intersection.
"""
from __future__ import annotations

import math
from typing import Tuple

import numpy as np
from scipy import integrate, stats

from frontseek.constants import DIRAC_SIGMA
from frontseek.core.hypervolume import _as_front, hypervolume_improvement_batch

_DRAW_CHUNK = 10**5
_Z_RANGE = 40.0


def _normal_draws(pred, draws: int, rng) -> np.ndarray:
    return pred.mu + pred.sigma * rng.standard_normal((draws, pred.mu.size))


def _mean_and_error(values: np.ndarray) -> Tuple[float, float]:
    if len(values) < 2:
        return float(np.mean(values)), 0.0
    return float(np.mean(values)), float(np.std(values, ddof=1) / math.sqrt(len(values)))


def oracle_mc_evi(P, ref, pred, draws: int, rng=None) -> Tuple[float, float]:
    """Mean hypervolume improvement over normal draws, with its standard error."""
    rng = rng if rng is not None else np.random.default_rng()
    P, ref = _as_front(P, ref)
    values = []
    remaining = draws
    while remaining > 0:
        size = min(_DRAW_CHUNK, remaining)
        values.append(hypervolume_improvement_batch(P, ref, _normal_draws(pred, size, rng)))
        remaining -= size
    return _mean_and_error(np.concatenate(values))


def oracle_mc_pnd(P, pred, draws: int, rng=None) -> Tuple[float, float]:
    """Fraction of normal draws that no point of `P` weakly dominates."""
    rng = rng if rng is not None else np.random.default_rng()
    P = np.asarray(P, dtype=float)
    if P.size == 0:
        return 1.0, 0.0
    P = P.reshape(-1, pred.mu.size)
    hits = []
    remaining = draws
    while remaining > 0:
        size = min(_DRAW_CHUNK, remaining)
        Y = _normal_draws(pred, size, rng)
        dominated = np.any(np.all(P[None, :, :] <= Y[:, None, :], axis=2), axis=1)
        hits.append((~dominated).astype(float))
        remaining -= size
    return _mean_and_error(np.concatenate(hits))


def _standardized_quad(weight, z_lo: float, z_hi: float) -> float:
    z_lo, z_hi = max(z_lo, -_Z_RANGE), min(z_hi, _Z_RANGE)
    if z_lo >= z_hi:
        return 0.0
    points = [0.0] if z_lo < 0.0 < z_hi else None
    value, _ = integrate.quad(
        lambda z: weight(z) * stats.norm.pdf(z),
        z_lo,
        z_hi,
        points=points,
        epsabs=1e-13,
        epsrel=1e-12,
        limit=200,
    )
    return value


def _step(x: float) -> float:
    return 1.0 if x > 0 else (0.5 if x == 0 else 0.0)


def quadrature_I1(a, b, c, mu, sigma) -> float:
    if sigma <= DIRAC_SIGMA:
        return (mu - c) * _step(b - mu) * _step(mu - a)
    return _standardized_quad(
        lambda z: mu + sigma * z - c, (a - mu) / sigma, (b - mu) / sigma
    )


def quadrature_I2(b, c, mu, sigma) -> float:
    if sigma <= DIRAC_SIGMA:
        return (mu - c) * _step(b - mu)
    return _standardized_quad(lambda z: mu + sigma * z - c, -np.inf, (b - mu) / sigma)


def quadrature_I3(a, b, mu, sigma) -> float:
    if sigma <= DIRAC_SIGMA:
        return _step(b - mu) * _step(mu - a)
    return _standardized_quad(lambda z: 1.0, (a - mu) / sigma, (b - mu) / sigma)


def oracle_mc_hypervolume(P, ref, draws: int, rng=None) -> Tuple[float, float]:
    """Dominated volume estimated from uniform draws in the box [min P, ref]."""
    rng = rng if rng is not None else np.random.default_rng()
    P, ref = _as_front(P, ref)
    P = P[np.all(P < ref, axis=1)]
    if len(P) == 0:
        return 0.0, 0.0
    lower = P.min(axis=0)
    box = float(np.prod(ref - lower))
    hits = []
    remaining = draws
    while remaining > 0:
        size = min(_DRAW_CHUNK, remaining)
        Z = lower + rng.random((size, ref.size)) * (ref - lower)
        hits.append(np.any(np.all(P[None, :, :] <= Z[:, None, :], axis=2), axis=1))
        remaining -= size
    mean, error = _mean_and_error(np.concatenate(hits).astype(float))
    return box * mean, box * error


def sample_ellipsoid(center, semi_axes, samples: int, rng) -> np.ndarray:
    """Uniform draws from the (possibly flat) axis-aligned ellipsoid."""
    center = np.asarray(center, dtype=float)
    n = center.size
    directions = rng.standard_normal((samples, n))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    radii = rng.random(samples) ** (1.0 / n)
    return center + directions * radii[:, None] * np.asarray(semi_axes, dtype=float)


def ellipsoid_box_sampling_hit(lower, upper, center, semi_axes, samples: int, rng) -> bool:
    """Whether any ellipsoid draw falls into the box; NaN lower ends are unbounded."""
    Z = sample_ellipsoid(center, semi_axes, samples, rng)
    lower = np.where(np.isnan(lower), -np.inf, lower)
    return bool(np.any(np.all((Z >= lower) & (Z <= upper), axis=1)))
