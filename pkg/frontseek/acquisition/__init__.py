"""
Acquisition utilities on a `Dataset`. Each operation builds the acquisition
function for the given models and data; the optimizer keeps one
`AcquisitionFunction` per working set instead.
"""
import numpy as np

from frontseek.acquisition.function import (
    U_CON,
    U_EXP,
    U_OPT,
    AcquisitionFunction,
    build_acquisition,
)
from frontseek.acquisition.utilities import (
    Repulsion,
    binary_entropy,
    distance_metric,
    metric_diameter,
    p_nondominated_batch,
    relative_volume_gamma,
    repulsion,
)
from frontseek.core.data import Bounds, Dataset
from frontseek.core.dominance import pareto_subset
from frontseek.errors import EmptyParetoSet
from frontseek.frontseek_dataclasses import AcquisitionConfig, AcquisitionWeights


def _single(classifier, regressor, D: Dataset, cfg: AcquisitionConfig, bounds: Bounds, weights):
    cfg = cfg.copy(update={'weights': AcquisitionWeights.of(*weights)})
    return build_acquisition(classifier, regressor, D, cfg, bounds)


def u_opt(classifier, regressor, D: Dataset, cfg: AcquisitionConfig, x, bounds: Bounds) -> float:
    if D.n_feasible == 0:
        raise EmptyParetoSet('the optimization utility needs a feasible objective vector')
    af = _single(classifier, regressor, D, cfg, bounds, (1.0, 0.0, 0.0))
    return float(af.components(x)[U_OPT][0])


def p_nondominated(regressor, D: Dataset, x) -> float:
    if regressor is None or D.n_feasible == 0:
        return 1.0
    mu, sigma = regressor.predict_batch(np.atleast_2d(x))
    return float(p_nondominated_batch(pareto_subset(D.y_star), mu, sigma)[0])


def u_con(classifier, regressor, D: Dataset, x) -> float:
    return p_nondominated(regressor, D, x) * binary_entropy(classifier.predict_feasible(x))


def u_exp(regressor, D: Dataset, epsilon: float, x, bounds: Bounds) -> float:
    return p_nondominated(regressor, D, x) * repulsion(D.x, epsilon, x, bounds)


def acquisition(
    models, D: Dataset, cfg: AcquisitionConfig, x, bounds: Bounds, metric=None
) -> float:
    """`models` holds the classifier and the regressor; the regressor may be None."""
    classifier, regressor = getattr(models, 'classifier', None), getattr(models, 'regressor', None)
    if classifier is None:
        classifier, regressor = models
    return build_acquisition(classifier, regressor, D, cfg, bounds, metric)(x)
