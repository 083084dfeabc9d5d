"""
Non-regular sector grid below a reference point. Grid coordinates per
objective are the reference coordinate, the front coordinates below it and a
symbolic negative infinity that never takes part in arithmetic.
"""
from __future__ import annotations

import dataclasses
import itertools
from typing import List, Sequence, Tuple, Union

import numpy as np

from frontseek.core.dominance import pareto_subset
from frontseek.core.hypervolume import grid_axes


class _NegativeInfinity:
    """Symbolic lower end of every grid axis."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return '-inf'

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __reduce__(self):
        return (_NegativeInfinity, ())


NEG_INF = _NegativeInfinity()

Coordinate = Union[float, _NegativeInfinity]


@dataclasses.dataclass(frozen=True)
class GridCoordinates:
    """
    Fields
    ------
    axes : per objective, the finite grid coordinates in descending order,
        starting with the reference coordinate.
    """

    axes: Tuple[np.ndarray, ...]

    @classmethod
    def from_front(cls, P, ref) -> 'GridCoordinates':
        return cls(tuple(grid_axes(P, ref)))

    @property
    def n_objectives(self) -> int:
        return len(self.axes)

    def coordinates(self, i: int) -> List[Coordinate]:
        return [float(c) for c in self.axes[i]] + [NEG_INF]

    def n_intervals(self, i: int) -> int:
        return len(self.axes[i])

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(axis) for axis in self.axes)

    def upper(self, i: int) -> np.ndarray:
        return self.axes[i]

    def lower(self, i: int) -> np.ndarray:
        """Finite lower interval ends; the last interval is unbounded (NaN here)."""
        return np.concatenate((self.axes[i][1:], [np.nan]))


@dataclasses.dataclass(frozen=True)
class Sector:
    """
    Axis-aligned grid cell spanned by adjacent grid coordinates.

    Fields
    ------
    index : interval index per objective, 0 being the interval right below the
        reference point.
    upper : upper interval end per objective.
    lower : lower interval end per objective, possibly NEG_INF.
    """

    index: Tuple[int, ...]
    upper: Tuple[float, ...]
    lower: Tuple[Coordinate, ...]

    def is_bounded(self, i: int) -> bool:
        return self.lower[i] is not NEG_INF

    def volume(self) -> float:
        if not all(self.is_bounded(i) for i in range(len(self.index))):
            return float('inf')
        return float(np.prod([u - lo for u, lo in zip(self.upper, self.lower)]))


def sectors_of(grid: GridCoordinates) -> List[Sector]:
    coordinates = [grid.coordinates(i) for i in range(grid.n_objectives)]
    sectors = []
    for index in itertools.product(*[range(n) for n in grid.shape]):
        sectors.append(
            Sector(
                index=tuple(index),
                upper=tuple(coordinates[i][j] for i, j in enumerate(index)),
                lower=tuple(coordinates[i][j + 1] for i, j in enumerate(index)),
            )
        )
    return sectors


def build_sector_grid(P, ref) -> List[Sector]:
    """All sectors tiling (-inf, ref], in lexicographic index order."""
    return sectors_of(GridCoordinates.from_front(pareto_subset(_as_2d(P, ref)), ref))


def is_nondominated_sector(sector: Sector, P) -> bool:
    for y in _as_2d(P, sector.upper):
        if not any(sector.lower[i] < y[i] for i in range(len(y))):
            return False
    return True


def nondominated_sectors(sectors: Sequence[Sector], P) -> List[Sector]:
    """Sectors whose interior holds points that no member of `P` dominates."""
    return [s for s in sectors if is_nondominated_sector(s, P)]


def nondominated_mask(grid: GridCoordinates, P) -> np.ndarray:
    """Vectorized `is_nondominated_sector` over the whole grid, shape `grid.shape`."""
    n = grid.n_objectives
    P = _as_2d(P, np.zeros(n))
    mask = np.ones(grid.shape, dtype=bool)
    for y in P:
        beaten = np.ones(grid.shape, dtype=bool)
        for i in range(n):
            lower = grid.lower(i)
            below = np.where(np.isnan(lower), True, lower < y[i])
            shape = [1] * n
            shape[i] = -1
            beaten &= ~below.reshape(shape)
        mask &= ~beaten
    return mask


def _as_2d(P, ref) -> np.ndarray:
    n = len(ref)
    P = np.asarray(P, dtype=float)
    if P.size == 0:
        return np.empty((0, n))
    return P.reshape(-1, n)
