"""
NSGA-II baseline for problems that only report binary feasibility. Feasible
designs always rank before infeasible ones; infeasible designs are ordered by
their crowding in design space with random tie-breaks.
"""
from __future__ import annotations

import dataclasses
import logging
import time
from typing import Optional

import numpy as np

from frontseek.core.data import Dataset
from frontseek.core.dominance import pareto_mask, pareto_subset
from frontseek.errors import ContractViolation
from frontseek.evaluation.metrics import relative_dominated_volume
from frontseek.evaluation.records import RecordRow, RunRecord
from frontseek.frontseek_dataclasses import NSGAIIConfig, StoppingCriterion

logger = logging.getLogger(__name__)


def crowding_distance(F: np.ndarray) -> np.ndarray:
    k = len(F)
    if k <= 2:
        return np.full(k, np.inf)
    distance = np.zeros(k)
    for j in range(F.shape[1]):
        order = np.argsort(F[:, j], kind='stable')
        span = F[order[-1], j] - F[order[0], j]
        distance[order[0]] = distance[order[-1]] = np.inf
        if span > 0:
            distance[order[1:-1]] += (F[order[2:], j] - F[order[:-2], j]) / span
    return distance


def nondominated_fronts(F: np.ndarray):
    """Successive Pareto layers of the rows of `F`, as index arrays."""
    remaining = np.arange(len(F))
    fronts = []
    while len(remaining):
        mask = pareto_mask(F[remaining])
        fronts.append(remaining[mask])
        remaining = remaining[~mask]
    return fronts


def rank_population(U: np.ndarray, Y: np.ndarray, feasible: np.ndarray, rng) -> tuple:
    """
    Rank and crowding per member; lower rank is better, larger crowding breaks
    ties. `U` are unit-cube designs, `Y` objectives (ignored where infeasible).
    """
    k = len(U)
    rank = np.zeros(k, dtype=int)
    crowd = np.zeros(k)
    feasible_idx = np.flatnonzero(feasible)
    level = 0
    if len(feasible_idx):
        for level, front in enumerate(nondominated_fronts(Y[feasible_idx])):
            members = feasible_idx[front]
            rank[members] = level
            crowd[members] = crowding_distance(Y[members])
        level += 1
    infeasible_idx = np.flatnonzero(~feasible)
    if len(infeasible_idx):
        rank[infeasible_idx] = level
        # random jitter only separates equal crowding values
        crowd[infeasible_idx] = crowding_distance(U[infeasible_idx]) + 1e-12 * rng.random(
            len(infeasible_idx)
        )
    return rank, crowd


def _survivors(rank, crowd, size: int) -> np.ndarray:
    order = np.lexsort((-crowd, rank))
    return order[:size]


def _tournament(rank, crowd, rng, count: int) -> np.ndarray:
    a = rng.integers(0, len(rank), count)
    b = rng.integers(0, len(rank), count)
    a_wins = (rank[a] < rank[b]) | ((rank[a] == rank[b]) & (crowd[a] >= crowd[b]))
    return np.where(a_wins, a, b)


def sbx_crossover(p1, p2, eta: float, rate: float, rng):
    """Simulated binary crossover on the unit cube."""
    c1, c2 = p1.copy(), p2.copy()
    if rng.random() > rate:
        return c1, c2
    for j in range(len(p1)):
        if rng.random() > 0.5 or abs(p1[j] - p2[j]) <= 1e-14:
            continue
        y1, y2 = min(p1[j], p2[j]), max(p1[j], p2[j])
        r = rng.random()
        children = []
        for gap in (y1, 1.0 - y2):
            beta = 1.0 + 2.0 * gap / (y2 - y1)
            alpha = 2.0 - beta ** -(eta + 1.0)
            if r <= 1.0 / alpha:
                betaq = (r * alpha) ** (1.0 / (eta + 1.0))
            else:
                betaq = (1.0 / (2.0 - r * alpha)) ** (1.0 / (eta + 1.0))
            children.append(betaq)
        lo = np.clip(0.5 * ((y1 + y2) - children[0] * (y2 - y1)), 0.0, 1.0)
        hi = np.clip(0.5 * ((y1 + y2) + children[1] * (y2 - y1)), 0.0, 1.0)
        if rng.random() <= 0.5:
            lo, hi = hi, lo
        c1[j], c2[j] = lo, hi
    return c1, c2


def polynomial_mutation(u, eta: float, rate: float, rng):
    u = u.copy()
    power = 1.0 / (eta + 1.0)
    for j in range(len(u)):
        if rng.random() >= rate:
            continue
        r = rng.random()
        if r < 0.5:
            value = 2.0 * r + (1.0 - 2.0 * r) * (1.0 - u[j]) ** (eta + 1.0)
            delta = value**power - 1.0
        else:
            value = 2.0 * (1.0 - r) + 2.0 * (r - 0.5) * u[j] ** (eta + 1.0)
            delta = 1.0 - value**power
        u[j] = np.clip(u[j] + delta, 0.0, 1.0)
    return u


def make_offspring(U, rank, crowd, size: int, cfg: NSGAIIConfig, rng) -> np.ndarray:
    d = U.shape[1]
    mutation_rate = cfg.mutation_rate if cfg.mutation_rate is not None else 1.0 / d
    parents = _tournament(rank, crowd, rng, size)
    children = []
    for i in range(0, size, 2):
        p1, p2 = U[parents[i]], U[parents[(i + 1) % size]]
        for child in sbx_crossover(p1, p2, cfg.crossover_eta, cfg.crossover_rate, rng):
            children.append(polynomial_mutation(child, cfg.mutation_eta, mutation_rate, rng))
    return np.vstack(children[:size])


@dataclasses.dataclass
class NSGAIIResult:
    dataset: Dataset
    record: RunRecord
    generations: int = 0

    def pareto_front(self) -> np.ndarray:
        Y = self.dataset.y_star
        return pareto_subset(Y) if len(Y) else Y


def _dv(D: Dataset, ref, true_volume) -> float:
    if true_volume is None:
        return float('nan')
    return relative_dominated_volume(D.y_star, ref, true_volume)


def nsgaii_optimize(
    problem,
    population: int,
    initial: Dataset,
    stop: StoppingCriterion,
    rng_seed=None,
    cfg: Optional[NSGAIIConfig] = None,
    true_volume: Optional[float] = None,
) -> NSGAIIResult:
    """
    Evolves a population started from `initial`. A generation evaluates
    `population` offspring and runs only if it fits the evaluation budget.
    """
    cfg = (cfg or NSGAIIConfig()).copy(update={'population': population})
    if population < 4 or population % 2:
        raise ContractViolation(f'population must be even and >= 4, got {population}')
    rng = np.random.default_rng(rng_seed)
    bounds = problem.bounds
    ref = np.asarray(problem.y_ref, dtype=float)
    n = problem.n_objectives

    D = initial.snapshot()
    U = bounds.scale(D.x)
    Y = np.vstack([s.y if s.feasible else np.full(n, np.nan) for s in D])
    F = D.feasibility
    record = RunRecord('nsgaii', population)
    dv = _dv(D, ref, true_volume)
    record.append(RecordRow(0, len(D), dv, 0.0))
    pure = 0.0
    generation = 0

    while True:
        if stop.target_relative_volume is not None and not np.isnan(dv):
            if dv >= stop.target_relative_volume:
                break
        if stop.max_evaluations is not None and len(D) + population > stop.max_evaluations:
            break
        started = time.perf_counter()
        rank, crowd = rank_population(U, Y, F, rng)
        children = make_offspring(U, rank, crowd, population, cfg, rng)
        elapsed = time.perf_counter() - started

        samples = [problem.evaluate(bounds.unscale(u)) for u in children]

        started = time.perf_counter()
        D.extend(samples)
        U = np.vstack([U, children])
        Y = np.vstack([Y] + [s.y if s.feasible else np.full(n, np.nan) for s in samples])
        F = np.concatenate([F, [s.feasible for s in samples]])
        rank, crowd = rank_population(U, Y, F, rng)
        keep = _survivors(rank, crowd, population)
        U, Y, F = U[keep], Y[keep], F[keep]
        generation += 1
        dv = _dv(D, ref, true_volume)
        pure += elapsed + time.perf_counter() - started
        record.append(RecordRow(generation, len(D), dv, pure))
        logger.debug(f'nsgaii generation {generation}: {len(D)} evaluations, dv={dv:.4f}')

    return NSGAIIResult(D, record, generation)


def nsgaii_run(
    problem,
    population: int,
    initial: Dataset,
    stop: StoppingCriterion,
    rng_seed=None,
    cfg: Optional[NSGAIIConfig] = None,
    true_volume: Optional[float] = None,
) -> RunRecord:
    return nsgaii_optimize(problem, population, initial, stop, rng_seed, cfg, true_volume).record
