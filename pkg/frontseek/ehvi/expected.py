"""
Expected hypervolume improvement of a separable normal prediction in closed
form.

For a prediction falling into the non-dominated sector s, the improvement is
the volume of every non-dominated sector s' at or above s (in interval index,
per objective) clipped to the box [y, ref]. Per objective the clipped length is
(u_i - y_i) when s' shares the interval with s, else the full interval length
of s'. Integrating against the density factorizes per objective, and grouping
the sectors s' by the set of objectives in which they lie strictly above s
leaves x-independent weights that are precomputed per front.
"""
from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from frontseek.core.dominance import pareto_subset
from frontseek.core.hypervolume import _as_front
from frontseek.ehvi.grid import GridCoordinates, nondominated_mask
from frontseek.ehvi.integrals import (
    gaussian_integral_I1,
    gaussian_integral_I2,
    gaussian_integral_I3,
    mass_below,
)

logger = logging.getLogger(__name__)

_CHUNK_CELLS = 4 * 10**6


class SectorDecomposition:
    """
    Non-dominated sectors of a front with the local-sector weights of the
    expected improvement. Built once per (front, reference point) and evaluated
    for any number of predictions.
    """

    def __init__(self, P, ref):
        P, ref = _as_front(P, ref)
        self.ref = ref
        self.front = pareto_subset(P) if len(P) else P
        self.grid = GridCoordinates.from_front(self.front, ref)
        n = ref.size
        self.n_objectives = n

        mask = nondominated_mask(self.grid, self.front)
        self.index = np.argwhere(mask)
        self.upper = np.stack(
            [self.grid.upper(i)[self.index[:, i]] for i in range(n)], axis=1
        )
        self.lower = np.stack(
            [self.grid.lower(i)[self.index[:, i]] for i in range(n)], axis=1
        )
        self.bounded = ~np.isnan(self.lower)
        self._subsets = (
            (np.arange(2**n)[:, None] >> np.arange(n)[None, :]) & 1
        ).astype(bool)
        self.weights = self._local_weights()
        logger.debug(
            f'{len(self.index)} non-dominated sectors of {int(np.prod(self.grid.shape))}'
        )

    def __len__(self):
        return len(self.index)

    def _local_weights(self) -> np.ndarray:
        """
        weights[s, k] sums, over the non-dominated sectors s' that lie strictly
        above s exactly in the objectives of subset k and share the interval of
        s elsewhere, the product of the interval lengths of s' over subset k.
        """
        n, S = self.n_objectives, len(self.index)
        weights = np.zeros((S, 2**n))
        if S == 0:
            return weights
        lengths = np.where(self.bounded, self.upper - np.nan_to_num(self.lower), 0.0)
        subset_lengths = np.stack(
            [np.prod(np.where(bits, lengths, 1.0), axis=1) for bits in self._subsets],
            axis=1,
        )
        powers = 1 << np.arange(n)
        chunk = max(1, _CHUNK_CELLS // (S * n))
        for start in range(0, S, chunk):
            outer = self.index[start : start + chunk]
            at_or_above = np.all(self.index[None, :, :] <= outer[:, None, :], axis=2)
            code = np.sum((self.index[None, :, :] < outer[:, None, :]) * powers, axis=2)
            for k in range(2**n):
                match = (at_or_above & (code == k)).astype(float)
                weights[start : start + chunk, k] = match @ subset_lengths[:, k]
        return weights

    def _interval_moments(self, mu, sigma):
        """
        Per objective, for every grid interval j and prediction row:
        A = integral of (u_j - y) N(y) over the interval and B = the mass of N
        on the interval; both of shape (m, intervals).
        """
        A, B = [], []
        for i in range(self.n_objectives):
            upper = self.grid.upper(i)
            m_i, s_i = mu[:, i : i + 1], sigma[:, i : i + 1]
            A_bounded = -np.asarray(
                gaussian_integral_I1(upper[1:], upper[:-1], upper[:-1], m_i, s_i)
            )
            A_open = -np.asarray(gaussian_integral_I2(upper[-1], upper[-1], m_i, s_i))
            B_bounded = np.asarray(gaussian_integral_I3(upper[1:], upper[:-1], m_i, s_i))
            B_open = np.asarray(mass_below(upper[-1], m_i, s_i))
            A.append(
                np.clip(
                    np.concatenate(
                        (A_bounded.reshape(len(mu), -1), A_open.reshape(len(mu), 1)),
                        axis=1,
                    ),
                    0.0,
                    None,
                )
            )
            B.append(
                np.clip(
                    np.concatenate(
                        (B_bounded.reshape(len(mu), -1), B_open.reshape(len(mu), 1)),
                        axis=1,
                    ),
                    0.0,
                    None,
                )
            )
        return A, B

    def expected_improvement(
        self, mu, sigma, sector_mask: Optional[np.ndarray] = None
    ) -> np.ndarray:
        """
        Expected improvement for every row of `mu`/`sigma` (shape (m, n)).
        `sector_mask` of shape (m, sectors) restricts the outer sum.
        """
        mu = np.atleast_2d(np.asarray(mu, dtype=float))
        sigma = np.atleast_2d(np.asarray(sigma, dtype=float))
        if len(self.index) == 0:
            return np.zeros(len(mu))
        A, B = self._interval_moments(mu, sigma)
        A = [A[i][:, self.index[:, i]] for i in range(self.n_objectives)]
        B = [B[i][:, self.index[:, i]] for i in range(self.n_objectives)]
        total = np.zeros((len(mu), len(self.index)))
        for k, bits in enumerate(self._subsets):
            weight = self.weights[:, k]
            if not np.any(weight):
                continue
            term = np.broadcast_to(weight, total.shape).copy()
            for i, above in enumerate(bits):
                term *= B[i] if above else A[i]
            total += term
        if sector_mask is not None:
            total = np.where(sector_mask, total, 0.0)
        return np.clip(total.sum(axis=1), 0.0, None)


def evi_exact(P, ref, pred) -> float:
    """Expected hypervolume improvement of `pred` over the front `P`."""
    return float(SectorDecomposition(P, ref).expected_improvement(pred.mu, pred.sigma)[0])
