import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from frontseek.acquisition import (
    Repulsion,
    binary_entropy,
    distance_metric,
    metric_diameter,
    p_nondominated_batch,
    relative_volume_gamma,
    repulsion,
)
from frontseek.core.data import Bounds
from frontseek.errors import ContractViolation, EmptyParetoSet
from frontseek.evaluation.oracles import oracle_mc_pnd
from frontseek.evaluation.suites import mc_tolerance, random_front
from frontseek.surrogates.base import NormalPrediction

BNH_BOUNDS = Bounds.from_pairs([(-5, 15), (-10, 10)])


@pytest.mark.parametrize(
    'P, ref, expected',
    [
        ([[0, 0]], (200, 50), 10000.0),
        ([[0, 2], [2, 0]], (3, 3), 9.0),
        ([[3, 1]], (3, 3), 1e-12),
    ],
)
def test_relative_volume_gamma(P, ref, expected):
    assert relative_volume_gamma(P, ref) == pytest.approx(expected)


def test_relative_volume_gamma_needs_a_point():
    with pytest.raises(EmptyParetoSet):
        relative_volume_gamma(np.empty((0, 2)), (1, 1))


def test_p_nondominated_empty_front():
    np.testing.assert_array_equal(p_nondominated_batch(np.empty((0, 2)), [[0, 0]], [[1, 1]]), [1.0])


@pytest.mark.parametrize(
    'P, mu, sigma, expected',
    [
        ([[1.0]], [1.0], [0.3], 0.5),
        ([[0.0, 0.0]], [0.0, 0.0], [1.0, 1.0], 0.75),
        ([[0.0, 0.0]], [0.0, 0.0], [0.0, 0.0], 0.0),
        ([[0.0, 0.0]], [-1.0, 5.0], [0.0, 0.0], 1.0),
    ],
)
def test_p_nondominated(P, mu, sigma, expected):
    assert p_nondominated_batch(P, [mu], [sigma])[0] == pytest.approx(expected)


def test_single_point_matches_sampling(rng):
    misses = 0
    for k in range(50):
        n = 1 + k % 3
        P = random_front(rng, 1, n)
        sigma = rng.uniform(0.02, 0.4, n)
        if k % 4 == 0:
            sigma[0] = 0.0
        pred = NormalPrediction(rng.random(n), sigma)
        estimate, error = oracle_mc_pnd(P, pred, 10**5, rng)
        misses += abs(p_nondominated_batch(P, [pred.mu], [pred.sigma])[0] - estimate) > mc_tolerance(error)
    assert misses <= 2


@pytest.mark.parametrize('p, expected', [(0.5, 1.0), (0.0, 0.0), (1.0, 0.0), (0.25, 0.8112781244591328)])
def test_binary_entropy(p, expected):
    assert binary_entropy(p) == pytest.approx(expected, abs=1e-12)


@given(st.floats(0, 1))
def test_binary_entropy_is_symmetric(p):
    assert binary_entropy(p) == pytest.approx(binary_entropy(1 - p), abs=1e-12)


def test_binary_entropy_outside_unit_interval():
    with pytest.raises(ContractViolation):
        binary_entropy(1.5)


def test_distance_metric():
    assert distance_metric([1, 2], [1, 2], 1.0, BNH_BOUNDS) == 0.0
    assert distance_metric([-5, -10], [15, 10], 0.0, BNH_BOUNDS) == 0.0
    assert distance_metric([-5, -10], [15, 10], 1.0, BNH_BOUNDS) == pytest.approx(1 - np.exp(-2))
    with pytest.raises(ContractViolation):
        distance_metric([0, 0], [1, 1], -1.0, BNH_BOUNDS)


def test_repulsion_at_explored_point():
    assert repulsion([[1.0, 2.0]], 1.0, [1.0, 2.0], BNH_BOUNDS) == 0.0


def test_repulsion_vanishes_at_every_explored_point(rng):
    D_x = BNH_BOUNDS.sample_uniform(rng, 8)
    values = Repulsion(D_x, 1.0, BNH_BOUNDS)(D_x)
    np.testing.assert_array_equal(values, np.zeros(8))


def test_repulsion_grows_with_distance_to_nearest_point():
    D_x = [[-5.0, -10.0], [15.0, 10.0]]
    near = repulsion(D_x, 1.0, [-4.0, -9.0], BNH_BOUNDS)
    middle = repulsion(D_x, 1.0, [5.0, 0.0], BNH_BOUNDS)
    assert 0.0 < near < middle < 1.0


def test_repulsion_at_opposite_corner():
    assert repulsion([[-5.0, -10.0]], 1.0, [15.0, 10.0], BNH_BOUNDS) == pytest.approx(1.0)


def test_repulsion_without_epsilon_is_zero():
    assert repulsion([[-5.0, -10.0]], 0.0, [15.0, 10.0], BNH_BOUNDS) == 0.0


def test_repulsion_needs_explored_points():
    with pytest.raises(ContractViolation):
        Repulsion(np.empty((0, 2)), 1.0, BNH_BOUNDS)


def test_repulsion_matches_sampled_diameter(rng):
    D_x = BNH_BOUNDS.sample_uniform(rng, 10)
    metric = lambda a, b: distance_metric(a, b, 1.0, BNH_BOUNDS)
    builtin = Repulsion(D_x, 1.0, BNH_BOUNDS)
    sampled = Repulsion(D_x, 1.0, BNH_BOUNDS, metric=metric, rng=rng)
    assert sampled.diameter == pytest.approx(metric_diameter(metric, BNH_BOUNDS, rng))
    X = BNH_BOUNDS.sample_uniform(rng, 20)
    direct = np.array([min(metric(x, y) for y in D_x) for x in X]) / sampled.diameter
    np.testing.assert_allclose(sampled(X), np.clip(direct, 0, 1))
    np.testing.assert_allclose(builtin(X), sampled(X), rtol=1e-12)
