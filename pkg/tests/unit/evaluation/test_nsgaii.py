import numpy as np
import pytest

from frontseek.core.dominance import pareto_subset
from frontseek.errors import ContractViolation
from frontseek.evaluation import nsgaii_optimize, nsgaii_run
from frontseek.evaluation.nsgaii import (
    crowding_distance,
    nondominated_fronts,
    polynomial_mutation,
    rank_population,
    sbx_crossover,
)
from frontseek.frontseek_dataclasses import StoppingCriterion
from frontseek.optimizer import initial_calculation
from frontseek.problems import lookup, reference_front_volume


@pytest.fixture()
def bnh_start():
    bnh = lookup('BNH')
    return bnh, initial_calculation(bnh, bnh.n0, 0)


def test_zero_generations_keep_the_initial_front(bnh_start):
    bnh, initial = bnh_start
    result = nsgaii_optimize(bnh, 50, initial, StoppingCriterion(max_evaluations=len(initial)), 0)
    assert result.generations == 0
    np.testing.assert_array_equal(result.pareto_front(), pareto_subset(initial.y_star))


def test_generations_fit_the_budget(bnh_start):
    bnh, initial = bnh_start
    record = nsgaii_run(bnh, 20, initial, StoppingCriterion(max_evaluations=len(initial) + 70), 0)
    assert [row.evals for row in record.rows] == [10, 30, 50, 70]


def test_deterministic(bnh_start):
    bnh, initial = bnh_start
    stop = StoppingCriterion(max_evaluations=len(initial) + 100)
    first = nsgaii_optimize(bnh, 20, initial, stop, 4)
    second = nsgaii_optimize(bnh, 20, initial, stop, 4)
    np.testing.assert_array_equal(first.dataset.x, second.dataset.x)


def test_population_must_be_even(bnh_start):
    bnh, initial = bnh_start
    with pytest.raises(ContractViolation):
        nsgaii_optimize(bnh, 21, initial, StoppingCriterion(max_evaluations=100), 0)


@pytest.mark.slow
def test_reaches_target_on_bnh(bnh_start):
    bnh, initial = bnh_start
    volume = reference_front_volume(bnh, 10**5).volume
    stop = StoppingCriterion(max_evaluations=2500, target_relative_volume=0.8)
    record = nsgaii_run(bnh, 50, initial, stop, 0, true_volume=volume)
    assert record.last.dv >= 0.8


def test_feasible_members_rank_first(rng):
    U = rng.random((6, 2))
    Y = np.array([[0, 1], [1, 0], [2, 2], [np.nan, np.nan], [0.5, 0.5], [np.nan, np.nan]])
    feasible = np.array([True, True, True, False, True, False])
    rank, crowd = rank_population(U, Y, feasible, rng)
    np.testing.assert_array_equal(rank, [0, 0, 1, 2, 0, 2])


def test_layers_and_crowding():
    F = np.array([[0, 3], [1, 2], [2, 1], [3, 0], [3, 3]], dtype=float)
    fronts = nondominated_fronts(F)
    np.testing.assert_array_equal(fronts[0], [0, 1, 2, 3])
    np.testing.assert_array_equal(fronts[1], [4])
    distance = crowding_distance(F[:4])
    assert np.isinf(distance[0]) and np.isinf(distance[3])
    assert distance[1] == pytest.approx(4 / 3)


def test_variation_stays_in_unit_cube(rng):
    for _ in range(100):
        p1, p2 = rng.random(3), rng.random(3)
        for child in sbx_crossover(p1, p2, 15.0, 0.9, rng):
            assert np.all((child >= 0) & (child <= 1))
            mutated = polynomial_mutation(child, 20.0, 1.0, rng)
            assert np.all((mutated >= 0) & (mutated <= 1))
