"""Probabilistic surrogate models of the objectives and of the feasibility."""
import numpy as np

from frontseek.surrogates.base import Classifier, NormalPrediction, Regressor
from frontseek.surrogates.classifiers import (
    ConstantClassifier,
    KernelLogisticClassifier,
    fit_classifier,
)
from frontseek.surrogates.regressors import StandardizedRegressor, fit_regressor


def predict_density(r: Regressor, x) -> NormalPrediction:
    return r.predict(x)


def expected_objectives(r: Regressor, x) -> np.ndarray:
    """The expectation of a normal density is its mean."""
    return r.predict(x).mu


def expected_feasibility(c: Classifier, x) -> float:
    return c.predict_feasible(x)
