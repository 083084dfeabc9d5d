"""
Ellipsoid truncation of the expected improvement: only non-dominated sectors
meeting the ellipsoid centred on the prediction mean with semi-axes
sigma_ref * sigma enter the outer sum.
"""
from __future__ import annotations

import dataclasses

import numpy as np

from frontseek.constants import ELLIPSOID_TOL
from frontseek.ehvi.expected import SectorDecomposition
from frontseek.ehvi.grid import Sector
from frontseek.errors import ContractViolation


@dataclasses.dataclass(frozen=True)
class TruncationEllipsoid:
    center: np.ndarray
    semi_axes: np.ndarray

    def __post_init__(self):
        center = np.asarray(self.center, dtype=float).reshape(-1)
        semi_axes = np.asarray(self.semi_axes, dtype=float).reshape(-1)
        if center.shape != semi_axes.shape or np.any(semi_axes < 0):
            raise ContractViolation('ellipsoid needs one nonnegative semi-axis per centre entry')
        object.__setattr__(self, 'center', center)
        object.__setattr__(self, 'semi_axes', semi_axes)

    @classmethod
    def from_prediction(cls, pred, sigma_ref: float) -> 'TruncationEllipsoid':
        if not sigma_ref > 0:
            raise ContractViolation(f'sigma_ref must be positive, got {sigma_ref}')
        return cls(pred.mu, sigma_ref * pred.sigma)


def _box_meets_ellipsoid(lower, upper, bounded, center, semi_axes) -> np.ndarray:
    """
    Broadcasting test of boxes against ellipsoids: clamp the centre into the box
    and measure the clamped offset in semi-axis units. Lower ends marked
    unbounded are ignored.
    """
    clamped = np.minimum(center, upper)
    clamped = np.where(bounded, np.maximum(clamped, np.nan_to_num(lower)), clamped)
    offset = clamped - center
    flat = semi_axes <= 0
    scaled = np.where(flat, 0.0, offset / np.where(flat, 1.0, semi_axes))
    missed_flat = np.any(flat & (np.abs(offset) > ELLIPSOID_TOL), axis=-1)
    return (np.sum(scaled**2, axis=-1) <= 1.0) & ~missed_flat


def sector_intersects_ellipsoid(s: Sector, e: TruncationEllipsoid) -> bool:
    bounded = np.array([s.is_bounded(i) for i in range(len(s.index))])
    lower = np.array([lo if b else np.nan for lo, b in zip(s.lower, bounded)], dtype=float)
    return bool(
        _box_meets_ellipsoid(
            lower, np.asarray(s.upper, dtype=float), bounded, e.center, e.semi_axes
        )
    )


def intersection_mask(decomposition: SectorDecomposition, mu, sigma, sigma_ref) -> np.ndarray:
    """Sectors of `decomposition` met by each prediction's ellipsoid, shape (m, sectors)."""
    mu = np.atleast_2d(np.asarray(mu, dtype=float))[:, None, :]
    axes = sigma_ref * np.atleast_2d(np.asarray(sigma, dtype=float))[:, None, :]
    return _box_meets_ellipsoid(
        decomposition.lower[None],
        decomposition.upper[None],
        decomposition.bounded[None],
        mu,
        axes,
    )


def evi_truncated(P, ref, pred, sigma_ref: float) -> float:
    """`evi_exact` restricted to the sectors meeting the truncation ellipsoid."""
    if not sigma_ref > 0:
        raise ContractViolation(f'sigma_ref must be positive, got {sigma_ref}')
    decomposition = SectorDecomposition(P, ref)
    mask = intersection_mask(decomposition, pred.mu, pred.sigma, sigma_ref)
    return float(decomposition.expected_improvement(pred.mu, pred.sigma, mask)[0])
