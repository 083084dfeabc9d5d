import numpy as np
import pytest

from frontseek.core.data import Bounds
from frontseek.frontseek_dataclasses import MaximizerConfig
from frontseek.optimizer import maximize_acquisition


def test_unimodal():
    bounds = Bounds.from_pairs([(0.0, 1.0)])
    x = maximize_acquisition(lambda x: -float(np.sum((x - 0.3) ** 2)), bounds, rng=np.random.default_rng(0))
    assert x[0] == pytest.approx(0.3, abs=1e-3)


def test_constant_function_stays_in_bounds():
    bounds = Bounds.from_pairs([(-2.0, -1.0), (3.0, 4.0)])
    x = maximize_acquisition(lambda x: 1.0, bounds, rng=np.random.default_rng(0))
    assert bounds.contains(x)


def test_batched_objects_are_used_through_evaluate(mocker):
    bounds = Bounds.from_pairs([(0.0, 1.0), (0.0, 1.0)])

    class Peak:
        def evaluate(self, X):
            return -np.sum((X - 0.7) ** 2, axis=1)

        def __call__(self, x):
            raise AssertionError('pointwise call')

    peak = Peak()
    spy = mocker.spy(peak, 'evaluate')
    x = maximize_acquisition(peak, bounds, rng=np.random.default_rng(1))
    np.testing.assert_allclose(x, [0.7, 0.7], atol=1e-3)
    assert spy.call_count > 0


def test_negated_rastrigin():
    bounds = Bounds.from_pairs([(-5.12, 5.12), (-5.12, 5.12)])

    class Rastrigin:
        def evaluate(self, X):
            return -(20 + np.sum(X**2 - 10 * np.cos(2 * np.pi * X), axis=1))

    found = 0
    for seed in range(20):
        x = maximize_acquisition(Rastrigin(), bounds, rng=np.random.default_rng(seed))
        found += float(np.max(np.abs(x))) <= 1e-2
    assert found >= 18


def test_restarts_keep_the_best_run(mocker):
    import frontseek.optimizer.maximizer as maximizer

    runs = mocker.patch.object(
        maximizer,
        'differential_evolution',
        side_effect=[
            mocker.Mock(x=np.array([0.9]), fun=-0.1, nfev=10),
            mocker.Mock(x=np.array([0.2]), fun=-0.5, nfev=10),
            mocker.Mock(x=np.array([0.6]), fun=-0.3, nfev=10),
        ],
    )
    bounds = Bounds.from_pairs([(0.0, 10.0)])
    cfg = MaximizerConfig(restarts=2, polish_maxfun=0)
    x = maximize_acquisition(lambda x: 0.0, bounds, cfg, rng=np.random.default_rng(0))
    assert runs.call_count == 3
    np.testing.assert_allclose(x, [2.0])
