""" Module holds reusable fixtures """
import os

import numpy as np
import pytest

from frontseek.core.data import Bounds, Dataset, Sample
from frontseek.frontseek_dataclasses import MaximizerConfig


@pytest.fixture(autouse=True, scope='session')
def setup_env():
    os.environ['FRONTSEEK_CI_RUN'] = 'True'


@pytest.fixture(autouse=True)
def cache_dir(tmp_path_factory, monkeypatch):
    path = tmp_path_factory.getbasetemp() / 'reference-cache'
    monkeypatch.setenv('FRONTSEEK_CACHE_DIR', str(path))
    return str(path)


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture()
def unit_bounds() -> Bounds:
    return Bounds.from_pairs([(0.0, 1.0), (0.0, 1.0)])


@pytest.fixture()
def staircase_front() -> np.ndarray:
    return np.array([[0.0, 2.0], [1.0, 1.0], [2.0, 0.0]])


@pytest.fixture()
def small_dataset() -> Dataset:
    """Six samples on the unit square, feasible iff x1 >= 0.4, objectives (x1, 1 - x1 x2)."""
    X = np.array(
        [[0.1, 0.2], [0.3, 0.9], [0.5, 0.5], [0.6, 0.1], [0.8, 0.7], [0.95, 0.4]]
    )
    samples = [
        Sample.make(x, [x[0], 1.0 - x[0] * x[1]], bool(x[0] >= 0.4)) for x in X
    ]
    return Dataset(samples, n_objectives=2)


@pytest.fixture()
def fast_maximizer() -> MaximizerConfig:
    return MaximizerConfig(population_per_dim=8, generations=30, polish_maxfun=50, restarts=1)
