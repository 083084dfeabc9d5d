from __future__ import annotations

import numpy as np

from frontseek.errors import ContractViolation

_CHUNK_CELLS = 2 * 10**7


def dominates(a, b) -> bool:
    """True iff `a` Pareto-dominates `b` under minimization."""
    a = np.asarray(a, dtype=float).reshape(-1)
    b = np.asarray(b, dtype=float).reshape(-1)
    if a.shape != b.shape:
        raise ContractViolation(
            f'cannot compare objective vectors of length {a.size} and {b.size}'
        )
    return bool(np.all(a <= b) and np.any(a < b))


def pareto_mask(Y) -> np.ndarray:
    """
    Boolean mask of the rows of `Y` that no other row dominates. Of several
    identical rows only the first one is kept.
    """
    Y = np.asarray(Y, dtype=float)
    if Y.ndim != 2:
        raise ContractViolation(f'expected a (k, n) array, got shape {Y.shape}')
    k, n = Y.shape
    if k == 0:
        return np.zeros(0, dtype=bool)
    if n == 1:
        mask = np.zeros(k, dtype=bool)
        mask[int(np.argmin(Y[:, 0]))] = True
        return mask
    if n == 2:
        return _pareto_mask_2d(Y)
    return _pareto_mask_pairwise(Y)


def pareto_subset(Y) -> np.ndarray:
    """The Pareto-optimal rows of `Y` in their original order."""
    Y = np.asarray(Y, dtype=float)
    if Y.size == 0:
        return Y.reshape(0, Y.shape[-1] if Y.ndim == 2 else 0)
    return Y[pareto_mask(Y)]


def _pareto_mask_2d(Y: np.ndarray) -> np.ndarray:
    # lexsort is stable, so equal rows stay in index order
    order = np.lexsort((Y[:, 1], Y[:, 0]))
    y2 = Y[order, 1]
    best_before = np.concatenate(([np.inf], np.minimum.accumulate(y2)[:-1]))
    keep_sorted = y2 < best_before
    mask = np.zeros(Y.shape[0], dtype=bool)
    mask[order[keep_sorted]] = True
    return mask


def _pareto_mask_pairwise(Y: np.ndarray) -> np.ndarray:
    k = Y.shape[0]
    mask = np.ones(k, dtype=bool)
    index = np.arange(k)
    chunk = max(1, _CHUNK_CELLS // (k * Y.shape[1]))
    for start in range(0, k, chunk):
        block = Y[start : start + chunk]
        weakly = np.all(Y[None, :, :] <= block[:, None, :], axis=2)
        strictly = np.any(Y[None, :, :] < block[:, None, :], axis=2)
        equal = np.all(Y[None, :, :] == block[:, None, :], axis=2)
        earlier = index[None, :] < index[start : start + chunk, None]
        beaten = (weakly & strictly) | (equal & earlier)
        mask[start : start + chunk] = ~np.any(beaten, axis=1)
    return mask
