"""
Dominated hypervolume with respect to a reference point: an exact sweep for
two objectives and the sector-grid decomposition for any number of objectives.
"""
from __future__ import annotations

from typing import List

import numpy as np

from frontseek.core.dominance import pareto_subset
from frontseek.errors import ContractViolation

_CHUNK_CELLS = 4 * 10**6


def _as_front(P, ref) -> tuple:
    ref = np.asarray(ref, dtype=float).reshape(-1)
    if ref.size < 1 or not np.all(np.isfinite(ref)):
        raise ContractViolation(f'reference point must be finite, got {ref}')
    P = np.asarray(P, dtype=float)
    if P.size == 0:
        return np.empty((0, ref.size)), ref
    P = P.reshape(-1, ref.size) if P.ndim == 1 else P
    if P.shape[1] != ref.size:
        raise ContractViolation(
            f'front has {P.shape[1]} objectives, reference point has {ref.size}'
        )
    return P, ref


def _inside(P: np.ndarray, ref: np.ndarray) -> np.ndarray:
    # points touching or above the reference point span a box of zero volume
    return P[np.all(P < ref, axis=1)]


def grid_axes(P, ref) -> List[np.ndarray]:
    """
    Per objective, the distinct finite grid coordinates in descending order:
    the reference coordinate followed by the coordinates of `P` below it.
    """
    P, ref = _as_front(P, ref)
    axes = []
    for i in range(ref.size):
        below = P[:, i][P[:, i] < ref[i]]
        axes.append(np.unique(np.concatenate(([ref[i]], below)))[::-1])
    return axes


def hypervolume(P, ref) -> float:
    """Lebesgue measure of the region dominated by `P` and bounded by `ref`."""
    P, ref = _as_front(P, ref)
    P = _inside(pareto_subset(P), ref) if len(P) else P
    if len(P) == 0:
        return 0.0
    if ref.size == 1:
        return float(ref[0] - P[:, 0].min())
    if ref.size == 2:
        return _hypervolume_sweep(P, ref)
    return _hypervolume_grid(P, ref)


def _hypervolume_sweep(P: np.ndarray, ref: np.ndarray) -> float:
    P = P[np.argsort(P[:, 0], kind='stable')]
    ceiling = np.concatenate(([ref[1]], np.minimum.accumulate(P[:, 1])[:-1]))
    heights = np.clip(ceiling - P[:, 1], 0.0, None)
    return float(np.sum((ref[0] - P[:, 0]) * heights))


def _hypervolume_grid(P: np.ndarray, ref: np.ndarray) -> float:
    """Sums the volumes of the finite grid sectors whose lower corner P dominates."""
    axes = grid_axes(P, ref)
    uppers = [axis[:-1] for axis in axes]
    lowers = [axis[1:] for axis in axes]
    if any(len(lower) == 0 for lower in lowers):
        return 0.0
    lower_corners = np.stack(np.meshgrid(*lowers, indexing='ij'), axis=-1).reshape(
        -1, ref.size
    )
    widths = np.stack(
        np.meshgrid(*[u - lo for u, lo in zip(uppers, lowers)], indexing='ij'), axis=-1
    ).reshape(-1, ref.size)
    chunk = max(1, _CHUNK_CELLS // (len(P) * ref.size))
    volume = 0.0
    for start in range(0, len(lower_corners), chunk):
        corners = lower_corners[start : start + chunk]
        dominated = np.any(np.all(P[None, :, :] <= corners[:, None, :], axis=2), axis=1)
        volume += float(np.sum(np.prod(widths[start : start + chunk][dominated], axis=1)))
    return volume


def hypervolume_improvement(P, ref, y) -> float:
    """Gain in dominated hypervolume when `y` joins the front `P`."""
    P, ref = _as_front(P, ref)
    y = np.asarray(y, dtype=float).reshape(1, -1)
    if y.shape[1] != ref.size:
        raise ContractViolation(
            f'candidate has {y.shape[1]} objectives, reference point has {ref.size}'
        )
    gain = hypervolume(np.vstack([P, y]), ref) - hypervolume(P, ref)
    return max(gain, 0.0)


def hypervolume_improvement_batch(P, ref, Y) -> np.ndarray:
    """
    `hypervolume_improvement` for every row of `Y`. Two objectives use a
    vectorized sweep of the front clipped at each candidate.
    """
    P, ref = _as_front(P, ref)
    Y = np.asarray(Y, dtype=float).reshape(-1, ref.size)
    if ref.size != 2:
        return np.array([hypervolume_improvement(P, ref, y) for y in Y])
    front = _inside(pareto_subset(P), ref) if len(P) else P
    front = front[np.argsort(front[:, 0], kind='stable')]
    box = np.prod(np.clip(ref - Y, 0.0, None), axis=1)
    if len(front) == 0:
        return box
    # the part of [y, ref] dominated by P is the volume dominated by max(P, y)
    clipped = np.maximum(front[None, :, :], Y[:, None, :])
    clipped = np.minimum(clipped, ref)
    ceiling = np.concatenate(
        (
            np.full((len(Y), 1), ref[1]),
            np.minimum.accumulate(clipped[:, :, 1], axis=1)[:, :-1],
        ),
        axis=1,
    )
    heights = np.clip(ceiling - clipped[:, :, 1], 0.0, None)
    covered = np.sum((ref[0] - clipped[:, :, 0]) * heights, axis=1)
    return np.clip(box - covered, 0.0, None)
