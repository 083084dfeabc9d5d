"""
The adaptive optimization loop: initial calculation, then per outer
iteration model update, a suggestion sequence against a working copy of the
data enriched with fantasy points, and a batch evaluation of the suggestions.
"""
from __future__ import annotations

import dataclasses
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Tuple

import numpy as np

from frontseek.acquisition.function import AcquisitionFunction
from frontseek.acquisition.utilities import Metric
from frontseek.constants import FANTASY_FEASIBLE_THRESHOLD, RegressorKinds
from frontseek.core.data import Bounds, Dataset, Sample
from frontseek.core.dominance import pareto_subset
from frontseek.core.hypervolume import hypervolume
from frontseek.decorators import Stopwatch
from frontseek.errors import EvaluationError
from frontseek.evaluation.records import RecordRow, RunRecord
from frontseek.frontseek_dataclasses import (
    AcquisitionConfig,
    MaximizerConfig,
    StoppingCriterion,
    SurrogateConfig,
)
from frontseek.optimizer.maximizer import maximize_acquisition
from frontseek.surrogates.base import Classifier, Regressor
from frontseek.surrogates.classifiers import fit_classifier
from frontseek.surrogates.regressors import fit_regressor

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Models:
    classifier: Classifier
    regressor: Optional[Regressor] = None


@dataclasses.dataclass(frozen=True)
class Fantasy:
    """Model expectations at a suggested point: objectives (if a regressor exists) and feasibility."""

    y_hat: Optional[np.ndarray]
    f_hat: float

    @property
    def counts_as_feasible(self) -> bool:
        return self.y_hat is not None and self.f_hat >= FANTASY_FEASIBLE_THRESHOLD


@dataclasses.dataclass(frozen=True)
class SuggestionBatch:
    points: Tuple[np.ndarray, ...]
    fantasies: Tuple[Fantasy, ...]
    acquisition_values: Tuple[float, ...] = ()

    def __len__(self):
        return len(self.points)


class WorkingSet:
    """D' of the suggestion sequence: the data set plus the fantasy points so far."""

    def __init__(self, D: Dataset):
        self.X = [np.asarray(s.x, dtype=float) for s in D]
        self.Y_star = [np.asarray(s.y, dtype=float) for s in D if s.feasible]
        self.n_objectives = D.n_objectives

    def add(self, x, fantasy: Fantasy):
        self.X.append(np.asarray(x, dtype=float))
        if fantasy.counts_as_feasible:
            self.Y_star.append(np.asarray(fantasy.y_hat, dtype=float))

    def x_matrix(self) -> np.ndarray:
        return np.vstack(self.X)

    def y_matrix(self, n_objectives: int) -> np.ndarray:
        if not self.Y_star:
            return np.empty((0, n_objectives))
        return np.vstack(self.Y_star)


@dataclasses.dataclass
class RunState:
    """
    Fields
    ------
    dataset : all evaluated samples.
    iteration : completed outer iterations.
    record : per-iteration evaluations, relative volume and cumulative timings.
    batches : the suggestion batches in order.
    """

    dataset: Dataset
    iteration: int = 0
    record: RunRecord = None
    batches: List[SuggestionBatch] = dataclasses.field(default_factory=list)

    def pareto_front(self) -> np.ndarray:
        Y = self.dataset.y_star
        return pareto_subset(Y) if len(Y) else Y


def _seed_from(rng: np.random.Generator) -> int:
    return int(rng.integers(0, 2**31 - 1))


def initial_calculation(problem, n0: Optional[int] = None, rng_seed=None, n_workers: int = 1) -> Dataset:
    """`n0` designs drawn uniformly from the initial box and evaluated."""
    rng = rng_seed if isinstance(rng_seed, np.random.Generator) else np.random.default_rng(rng_seed)
    n0 = n0 or problem.n0
    X = problem.initial_bounds.sample_uniform(rng, n0)
    return Dataset(evaluate_batch(problem, X, n_workers), n_objectives=problem.n_objectives)


def evaluate_batch(problem, X, n_workers: int = 1) -> List[Sample]:
    """Evaluates the rows of `X`, concurrently if asked; results keep the row order."""
    if n_workers <= 1 or len(X) <= 1:
        return [problem.evaluate(x) for x in X]
    with ThreadPoolExecutor(max_workers=n_workers) as executor:
        return list(executor.map(problem.evaluate, X))


def update_models(
    D: Dataset,
    bounds: Bounds,
    surrogate: Optional[SurrogateConfig] = None,
    kind: str = RegressorKinds.GP_MATERN,
    seed: int = 0,
) -> Models:
    surrogate = surrogate or SurrogateConfig()
    kind = surrogate.regressor or kind
    X, labels = D.xf
    classifier = fit_classifier(X, labels, bounds=bounds, seed=seed)
    regressor = None
    if D.n_feasible >= 2:
        X_star, Y_star = D.xy_star
        try:
            regressor = fit_regressor(
                X_star,
                Y_star,
                kind=kind,
                bounds=bounds,
                jitter=surrogate.gp_jitter,
                restarts=surrogate.gp_restarts,
                degree=surrogate.poly_degree,
                max_iter=surrogate.ridge_max_iter,
                tol=surrogate.ridge_tol,
                seed=seed,
            )
        except np.linalg.LinAlgError as e:
            logger.warning(f'regressor fit failed ({e}), continuing without objective model')
    else:
        logger.info(f'{D.n_feasible} feasible samples, objective model not fitted yet')
    return Models(classifier, regressor)


def suggestion_sequence(
    models: Models,
    D: Dataset,
    cfg: AcquisitionConfig,
    n_seq: int,
    bounds: Bounds,
    maximizer: Optional[MaximizerConfig] = None,
    rng: Optional[np.random.Generator] = None,
    metric: Optional[Metric] = None,
) -> SuggestionBatch:
    """
    Maximizes the acquisition function `n_seq` times; after each maximization
    the point and its model expectations join the working set, so the next
    maximization sees it as explored.
    """
    rng = rng if rng is not None else np.random.default_rng()
    working = WorkingSet(D)
    n = len(cfg.y_ref)
    points, fantasies, values = [], [], []
    for _ in range(n_seq):
        af = AcquisitionFunction(
            models.classifier,
            models.regressor,
            working.x_matrix(),
            working.y_matrix(n),
            cfg,
            bounds,
            metric,
        )
        x = maximize_acquisition(af, bounds, maximizer, rng)
        values.append(af(x))
        y_hat = models.regressor.predict(x).mu if models.regressor is not None else None
        fantasy = Fantasy(y_hat=y_hat, f_hat=models.classifier.predict_feasible(x))
        working.add(x, fantasy)
        points.append(x)
        fantasies.append(fantasy)
    return SuggestionBatch(tuple(points), tuple(fantasies), tuple(values))


def _relative_volume(D: Dataset, ref, true_volume: Optional[float]) -> float:
    if true_volume is None:
        return float('nan')
    Y = D.y_star
    if len(Y) == 0:
        return 0.0
    return float(np.clip(hypervolume(pareto_subset(Y), ref) / true_volume, 0.0, 1.0))


def _should_stop(D: Dataset, dv: float, stop: StoppingCriterion) -> bool:
    if stop.max_evaluations is not None and len(D) >= stop.max_evaluations:
        return True
    if stop.target_relative_volume is not None and not np.isnan(dv):
        return dv >= stop.target_relative_volume
    return False


def optimize(
    problem,
    cfg: AcquisitionConfig,
    n_seq: Optional[int] = None,
    stop: Optional[StoppingCriterion] = None,
    rng_seed=None,
    *,
    true_volume: Optional[float] = None,
    initial: Optional[Dataset] = None,
    maximizer: Optional[MaximizerConfig] = None,
    surrogate: Optional[SurrogateConfig] = None,
    n_workers: int = 1,
    metric: Optional[Metric] = None,
    callback: Optional[Callable[[RunState], None]] = None,
) -> Tuple[np.ndarray, RunState]:
    """
    Runs the adaptive optimization on `problem` until `stop` holds and returns
    the Pareto subset of the feasible objectives with the full run state.

    `problem` needs `bounds`, `initial_bounds`, `n0`, `n_objectives` and
    `evaluate(x) -> Sample`. A target relative volume needs `true_volume`.
    The last batch is shortened to respect `stop.max_evaluations`.
    """
    n_seq = n_seq or cfg.n_seq
    stop = stop or StoppingCriterion(max_evaluations=problem.n0 + 10 * n_seq)
    if stop.target_relative_volume is not None and true_volume is None:
        logger.warning('no reference volume given, the relative volume target is ignored')
    rng = np.random.default_rng(rng_seed)
    kind = getattr(problem, 'regressor', RegressorKinds.GP_MATERN)
    ref = np.asarray(cfg.y_ref, dtype=float)

    pure, model_time, acq_time = Stopwatch(), Stopwatch(), Stopwatch()
    if initial is not None:
        D = initial.snapshot()
    else:
        D = initial_calculation(problem, problem.n0, rng, n_workers)
    state = RunState(dataset=D, record=RunRecord('adaptive', n_seq))
    dv = _relative_volume(D, ref, true_volume)
    state.record.append(RecordRow(0, len(D), dv, 0.0, 0.0, 0.0))

    while not _should_stop(D, dv, stop):
        started = time.perf_counter()
        with model_time.measure():
            models = update_models(D, problem.bounds, surrogate, kind, _seed_from(rng))
        size = n_seq
        if stop.max_evaluations is not None:
            size = min(size, stop.max_evaluations - len(D))
        with acq_time.measure():
            batch = suggestion_sequence(
                models, D, cfg, size, problem.bounds, maximizer, rng, metric
            )
        suggest_elapsed = time.perf_counter() - started

        try:
            samples = evaluate_batch(problem, np.vstack(batch.points), n_workers)
        except Exception as e:
            raise EvaluationError(f'black-box evaluation failed: {e}', state) from e

        started = time.perf_counter()
        D.extend(samples)
        state.batches.append(batch)
        state.iteration += 1
        dv = _relative_volume(D, ref, true_volume)
        pure.total += suggest_elapsed + time.perf_counter() - started
        state.record.append(
            RecordRow(
                state.iteration, len(D), dv, pure.total, model_time.total, acq_time.total
            )
        )
        logger.info(
            f'iteration {state.iteration}: {len(D)} evaluations, '
            f'{D.n_feasible} feasible, dv={dv:.4f}, '
            f'model {model_time.total:.1f}s, acquisition {acq_time.total:.1f}s'
        )
        if callback is not None:
            callback(state)

    return state.pareto_front(), state
