"""
Feasibility classifiers: a kernel logistic regression on Nystroem RBF features,
with a Laplace-smoothed constant classifier while only one label has been seen.
"""
from __future__ import annotations

import logging
from typing import Optional

import numpy as np
from sklearn.kernel_approximation import Nystroem
from sklearn.linear_model import LogisticRegression
from sklearn.model_selection import GridSearchCV, StratifiedKFold
from sklearn.pipeline import Pipeline

from frontseek.core.data import Bounds
from frontseek.decorators import timed
from frontseek.errors import NotEnoughData
from frontseek.surrogates.base import Classifier

logger = logging.getLogger(__name__)

_MAX_COMPONENTS = 200
_MIN_CV_CLASS = 3
_PARAM_GRID = {
    'logistic__C': [1.0, 10.0, 100.0, 1000.0],
    'features__gamma': [1.0, 5.0, 25.0],
}


class ConstantClassifier(Classifier):
    def __init__(self, probability: float):
        self.probability = float(probability)

    def predict_feasible_batch(self, X):
        return np.full(len(np.atleast_2d(X)), self.probability)


class KernelLogisticClassifier(Classifier):
    def __init__(self, bounds: Bounds, pipeline: Pipeline):
        self.bounds = bounds
        self.pipeline = pipeline
        self.feasible_column = list(pipeline.classes_).index(1)

    def predict_feasible_batch(self, X):
        U = self.bounds.scale(np.atleast_2d(np.asarray(X, dtype=float)))
        return np.clip(self.pipeline.predict_proba(U)[:, self.feasible_column], 0.0, 1.0)


def _pipeline(n_components: int, seed: int, gamma: float = 5.0, C: float = 100.0):
    return Pipeline(
        [
            (
                'features',
                Nystroem(kernel='rbf', gamma=gamma, n_components=n_components, random_state=seed),
            ),
            ('logistic', LogisticRegression(C=C, max_iter=2000)),
        ]
    )


@timed
def fit_classifier(X, labels, bounds: Optional[Bounds] = None, seed: int = 0) -> Classifier:
    """
    Fits a probabilistic feasibility classifier on D_xf: design matrix `X`
    and labels (1 feasible, 0 infeasible).
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    labels = np.asarray(labels, dtype=int).reshape(-1)
    k = len(labels)
    if k == 0 or X.size == 0:
        raise NotEnoughData('feasibility classification needs at least 1 sample')
    k_feasible = int(labels.sum())
    if k_feasible in (0, k):
        probability = (k_feasible + 1) / (k + 2)
        logger.info(f'one-class training set, constant feasibility {probability:.3f}')
        return ConstantClassifier(probability)

    if bounds is None:
        lower, upper = X.min(axis=0), X.max(axis=0)
        bounds = Bounds(lower, np.where(upper > lower, upper, lower + 1.0))
    U = bounds.scale(X)
    n_components = min(k, _MAX_COMPONENTS)
    minority = min(k_feasible, k - k_feasible)
    if minority >= _MIN_CV_CLASS:
        search = GridSearchCV(
            _pipeline(n_components, seed),
            _PARAM_GRID,
            scoring='neg_log_loss',
            cv=StratifiedKFold(n_splits=min(5, minority), shuffle=True, random_state=seed),
            refit=True,
        )
        pipeline = search.fit(U, labels).best_estimator_
        logger.debug(f'classifier grid search picked {search.best_params_}')
    else:
        pipeline = _pipeline(n_components, seed).fit(U, labels)
    return KernelLogisticClassifier(bounds, pipeline)
