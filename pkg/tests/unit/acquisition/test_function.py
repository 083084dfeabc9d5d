import numpy as np
import pytest

from frontseek.acquisition import (
    U_CON,
    U_EXP,
    U_OPT,
    AcquisitionFunction,
    acquisition,
    build_acquisition,
    p_nondominated,
    u_con,
    u_exp,
    u_opt,
)
from frontseek.core.data import Dataset, Sample
from frontseek.errors import EmptyParetoSet
from frontseek.frontseek_dataclasses import AcquisitionConfig, AcquisitionWeights
from frontseek.surrogates import ConstantClassifier


def _config(weights=(1, 1, 1), **kwargs):
    return AcquisitionConfig(weights=AcquisitionWeights.of(*weights), y_ref=[1.0, 1.0], **kwargs)


def test_u_opt_vanishes_without_improvement(small_dataset, unit_bounds, fixed_regressor):
    regressor = fixed_regressor([5.0, 5.0], [1e-9, 1e-9])
    assert u_opt(ConstantClassifier(0.9), regressor, small_dataset, _config(), [0.5, 0.5], unit_bounds) == 0.0


def test_u_opt_vanishes_when_infeasible(small_dataset, unit_bounds, fixed_regressor):
    regressor = fixed_regressor([0.0, 0.0], [0.1, 0.1])
    assert u_opt(ConstantClassifier(0.0), regressor, small_dataset, _config(), [0.5, 0.5], unit_bounds) == 0.0


def test_u_opt_saturates_to_feasibility(small_dataset, unit_bounds, fixed_regressor):
    regressor = fixed_regressor([0.0, 0.0], [0.1, 0.1])
    value = u_opt(
        ConstantClassifier(0.7), regressor, small_dataset, _config(gamma=1e9), [0.5, 0.5], unit_bounds
    )
    assert value == pytest.approx(0.7)


def test_u_opt_needs_a_feasible_point(unit_bounds, fixed_regressor):
    D = Dataset([Sample.make([0.1, 0.1], None, False)], n_objectives=2)
    with pytest.raises(EmptyParetoSet):
        u_opt(ConstantClassifier(0.5), fixed_regressor([0, 0], [1, 1]), D, _config(), [0.5, 0.5], unit_bounds)


def test_p_nondominated_without_feasible_data(fixed_regressor):
    D = Dataset([Sample.make([0.1, 0.1], None, False)], n_objectives=2)
    assert p_nondominated(fixed_regressor([5, 5], [0, 0]), D, [0.2, 0.2]) == 1.0


def test_u_con(small_dataset, fixed_regressor):
    free = fixed_regressor([-10.0, -10.0], [0.0, 0.0])
    dominated = fixed_regressor([10.0, 10.0], [0.0, 0.0])
    assert u_con(ConstantClassifier(0.5), free, small_dataset, [0.5, 0.5]) == pytest.approx(1.0)
    assert u_con(ConstantClassifier(1.0), free, small_dataset, [0.5, 0.5]) == 0.0
    assert u_con(ConstantClassifier(0.5), dominated, small_dataset, [0.5, 0.5]) == 0.0


def test_u_exp(small_dataset, unit_bounds, fixed_regressor):
    free = fixed_regressor([-10.0, -10.0], [0.0, 0.0])
    dominated = fixed_regressor([10.0, 10.0], [0.0, 0.0])
    explored = small_dataset.x[0]
    assert u_exp(free, small_dataset, 1.0, explored, unit_bounds) == 0.0
    assert u_exp(dominated, small_dataset, 1.0, [0.0, 1.0], unit_bounds) == 0.0


def test_u_exp_with_empty_front_is_the_repulsion(unit_bounds, fixed_regressor):
    D = Dataset([Sample.make([0.0, 0.0], None, False)], n_objectives=2)
    value = u_exp(fixed_regressor([0, 0], [1, 1]), D, 1.0, [1.0, 1.0], unit_bounds)
    assert value == pytest.approx(1.0)


def test_constraint_weights_give_u_con(small_dataset, unit_bounds, fixed_regressor):
    regressor = fixed_regressor([0.3, 0.4], [0.2, 0.2])
    classifier = ConstantClassifier(0.3)
    x = [0.2, 0.7]
    af = acquisition((classifier, regressor), small_dataset, _config((0, 1, 0)), x, unit_bounds)
    assert af == pytest.approx(u_con(classifier, regressor, small_dataset, x))


def test_weighted_mean_of_utilities(mocker, small_dataset, unit_bounds):
    af = build_acquisition(ConstantClassifier(0.5), None, small_dataset, _config(), unit_bounds)
    parts = {
        'p_feasible': np.array([0.5]),
        U_OPT: np.array([0.3]),
        U_CON: np.array([0.6]),
        U_EXP: np.array([0.9]),
    }
    mocker.patch.object(AcquisitionFunction, 'components', return_value=parts)
    assert af([0.5, 0.5]) == pytest.approx(0.6)
    parts.update({U_OPT: np.ones(1), U_CON: np.ones(1), U_EXP: np.ones(1)})
    assert af([0.5, 0.5]) == pytest.approx(1.0)


def test_without_regressor_every_point_is_nondominated(small_dataset, unit_bounds):
    af = build_acquisition(ConstantClassifier(0.5), None, small_dataset, _config(), unit_bounds)
    parts = af.components(np.array([[0.2, 0.2], [0.9, 0.9]]))
    np.testing.assert_array_equal(parts['p_nondominated'], [1.0, 1.0])
    np.testing.assert_array_equal(parts[U_OPT], [0.0, 0.0])


def test_zero_weights_skip_their_utility(small_dataset, unit_bounds):
    af = build_acquisition(ConstantClassifier(0.5), None, small_dataset, _config((0, 1, 0)), unit_bounds)
    assert set(af.components([[0.5, 0.5]])) == {'p_feasible', 'p_nondominated', U_CON}


def test_batch_matches_pointwise(small_dataset, unit_bounds, fixed_regressor, rng):
    af = build_acquisition(
        ConstantClassifier(0.6), fixed_regressor([0.5, 0.3], [0.1, 0.2]), small_dataset, _config(), unit_bounds
    )
    X = rng.random((15, 2))
    np.testing.assert_allclose(af.evaluate(X), [af(x) for x in X])
    assert np.all((af.evaluate(X) >= 0) & (af.evaluate(X) <= 1))
