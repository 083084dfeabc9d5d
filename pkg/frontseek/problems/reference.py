"""
Reference volumes of the true Pareto fronts, computed by dense uniform
sampling of the design space and cached on disk.
"""
from __future__ import annotations

import dataclasses
import json
import logging
import os
from typing import Optional

import numpy as np

from frontseek.constants import REFERENCE_CHUNK
from frontseek.core.dominance import pareto_subset
from frontseek.core.hypervolume import hypervolume
from frontseek.decorators import timed
from frontseek.errors import ContractViolation
from frontseek.problems.base import BenchmarkProblem
from frontseek.settings import get_cache_dir
from frontseek.utils import atomic_write_text

logger = logging.getLogger(__name__)

MIN_RESOLUTION = 10**5


@dataclasses.dataclass(frozen=True)
class TrueFrontReference:
    problem: str
    seed: int
    resolution: int
    volume: float
    front: np.ndarray

    @property
    def front_count(self) -> int:
        return len(self.front)

    def to_json(self) -> str:
        return json.dumps(
            {
                'problem': self.problem,
                'seed': self.seed,
                'resolution': self.resolution,
                'volume': self.volume,
                'front_count': self.front_count,
                'front': self.front.tolist(),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> 'TrueFrontReference':
        content = json.loads(text)
        return cls(
            problem=content['problem'],
            seed=int(content['seed']),
            resolution=int(content['resolution']),
            volume=float(content['volume']),
            front=np.asarray(content['front'], dtype=float),
        )


def _cache_path(problem: BenchmarkProblem, resolution: int, seed: int, cache_dir) -> str:
    return os.path.join(cache_dir, f'{problem.name}-{resolution}-{seed}.json')


@timed
def _sample_front(problem: BenchmarkProblem, resolution: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    front = np.empty((0, problem.n_objectives))
    remaining = resolution
    while remaining > 0:
        size = min(REFERENCE_CHUNK, remaining)
        Y, F = problem.evaluate_batch(problem.bounds.sample_uniform(rng, size))
        if np.any(F):
            front = pareto_subset(np.vstack([front, pareto_subset(Y[F])]))
        remaining -= size
    return front


def reference_front_volume(
    problem: BenchmarkProblem,
    resolution: Optional[int] = None,
    seed: int = 0,
    cache_dir: Optional[str] = None,
    use_cache: bool = True,
) -> TrueFrontReference:
    """
    Dominated volume of the sampled true front with respect to the problem's
    reference point. Results are cached per (problem, resolution, seed).
    """
    resolution = resolution or problem.reference_resolution
    if resolution < MIN_RESOLUTION:
        raise ContractViolation(f'reference resolution must be >= {MIN_RESOLUTION}')
    cache_dir = cache_dir or get_cache_dir()
    path = _cache_path(problem, resolution, seed, cache_dir)
    if use_cache and os.path.isfile(path):
        with open(path) as f:
            return TrueFrontReference.from_json(f.read())

    logger.info(f'sampling the {problem.name} front at resolution {resolution:g}')
    front = _sample_front(problem, resolution, seed)
    volume = hypervolume(front, problem.y_ref)
    if volume <= 0:
        raise ContractViolation(f'{problem.name} reference front spans no volume')
    reference = TrueFrontReference(problem.name, seed, resolution, volume, front)
    if use_cache:
        os.makedirs(cache_dir, exist_ok=True)
        atomic_write_text(path, reference.to_json())
    return reference
