"""
Domain types of the optimizer: design-space bounds, evaluation samples and the
append-only dataset with its partial views D_x, D_y*, D_xy* and D_xf.
"""
from __future__ import annotations

import dataclasses
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from frontseek.errors import ContractViolation
from frontseek.utils import BetterEnum


class Feasibility(BetterEnum):
    FEASIBLE = 'feasible'
    INFEASIBLE = 'infeasible'


@dataclasses.dataclass(frozen=True)
class Bounds:
    """
    Closed box [lower_j, upper_j] of a design space.

    Fields
    ------
    lower : lower bound per design dimension.
    upper : upper bound per design dimension, strictly above `lower`.
    """

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float).reshape(-1)
        upper = np.asarray(self.upper, dtype=float).reshape(-1)
        if lower.size < 1 or lower.shape != upper.shape:
            raise ContractViolation('bounds need d >= 1 matching lower/upper entries')
        if not np.all(lower < upper):
            raise ContractViolation(f'bounds must satisfy lo < hi, got {lower}, {upper}')
        object.__setattr__(self, 'lower', lower)
        object.__setattr__(self, 'upper', upper)

    @classmethod
    def from_pairs(cls, pairs: Sequence[Tuple[float, float]]) -> 'Bounds':
        pairs = np.asarray(pairs, dtype=float)
        return cls(pairs[:, 0], pairs[:, 1])

    @property
    def dim(self) -> int:
        return self.lower.size

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    def as_pairs(self) -> List[Tuple[float, float]]:
        return list(zip(self.lower.tolist(), self.upper.tolist()))

    def contains(self, x, atol: float = 1e-12) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(
            np.all(x >= self.lower - atol) and np.all(x <= self.upper + atol)
        )

    def check(self, x) -> np.ndarray:
        """Returns `x` as a float array, raising if it leaves the box."""
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != self.dim:
            raise ContractViolation(
                f'design vector has {x.shape[-1]} entries, bounds have {self.dim}'
            )
        if not self.contains(x):
            raise ContractViolation(f'design vector {x} outside bounds {self.as_pairs()}')
        return np.clip(x, self.lower, self.upper)

    def scale(self, x) -> np.ndarray:
        """Affine map of the box onto the unit cube."""
        return (np.asarray(x, dtype=float) - self.lower) / self.width

    def unscale(self, u) -> np.ndarray:
        return self.lower + np.asarray(u, dtype=float) * self.width

    def sample_uniform(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return self.lower + rng.random((size, self.dim)) * self.width

    def is_subset_of(self, other: 'Bounds') -> bool:
        return bool(
            np.all(self.lower >= other.lower) and np.all(self.upper <= other.upper)
        )


@dataclasses.dataclass(frozen=True)
class Sample:
    """
    One evaluation record d = (x, y, f). Infeasible samples carry no objective
    vector; reading `y` on them is a contract violation.
    """

    x: np.ndarray
    feasible: bool
    _y: Optional[np.ndarray] = None

    @classmethod
    def make(cls, x, y, feasible: bool) -> 'Sample':
        x = np.asarray(x, dtype=float).reshape(-1)
        if feasible:
            y = np.asarray(y, dtype=float).reshape(-1)
            if y.size < 1 or not np.all(np.isfinite(y)):
                raise ContractViolation(f'objective vector must be finite, got {y}')
            return cls(x=x, feasible=True, _y=y)
        return cls(x=x, feasible=False, _y=None)

    @property
    def f(self) -> str:
        return Feasibility.FEASIBLE if self.feasible else Feasibility.INFEASIBLE

    @property
    def y(self) -> np.ndarray:
        if not self.feasible:
            raise ContractViolation('infeasible samples carry no objective vector')
        return self._y


class Dataset:
    """
    Ordered, append-only collection of samples. The partial views are derived
    on access from the sample list.
    """

    def __init__(self, samples: Iterable[Sample] = (), n_objectives: int = None):
        self._samples: List[Sample] = []
        self.n_objectives = n_objectives
        self.extend(samples)

    def append(self, sample: Sample):
        if sample.feasible:
            if self.n_objectives is None:
                self.n_objectives = sample.y.size
            elif sample.y.size != self.n_objectives:
                raise ContractViolation(
                    f'expected {self.n_objectives} objectives, got {sample.y.size}'
                )
        self._samples.append(sample)

    def extend(self, samples: Iterable[Sample]):
        for sample in samples:
            self.append(sample)

    def snapshot(self) -> 'Dataset':
        return Dataset(self._samples, n_objectives=self.n_objectives)

    @property
    def samples(self) -> Tuple[Sample, ...]:
        return tuple(self._samples)

    def __len__(self):
        return len(self._samples)

    def __iter__(self):
        return iter(tuple(self._samples))

    def __getitem__(self, item):
        return self._samples[item]

    @property
    def n_feasible(self) -> int:
        return sum(s.feasible for s in self._samples)

    @property
    def x(self) -> np.ndarray:
        """D_x, shape (k, d)."""
        if not self._samples:
            return np.empty((0, 0))
        return np.vstack([s.x for s in self._samples])

    @property
    def feasibility(self) -> np.ndarray:
        return np.array([s.feasible for s in self._samples], dtype=bool)

    @property
    def y_star(self) -> np.ndarray:
        """D_y*, the objectives of the feasible samples, shape (k*, n)."""
        ys = [s.y for s in self._samples if s.feasible]
        if not ys:
            return np.empty((0, self.n_objectives or 0))
        return np.vstack(ys)

    @property
    def xy_star(self) -> Tuple[np.ndarray, np.ndarray]:
        """D_xy*, the feasible pairs as (X, Y)."""
        feasible = [s for s in self._samples if s.feasible]
        if not feasible:
            return np.empty((0, self.x.shape[1])), self.y_star
        return np.vstack([s.x for s in feasible]), np.vstack([s.y for s in feasible])

    @property
    def xf(self) -> Tuple[np.ndarray, np.ndarray]:
        """D_xf, every design vector with its binary label (feasible = 1)."""
        return self.x, self.feasibility.astype(int)
