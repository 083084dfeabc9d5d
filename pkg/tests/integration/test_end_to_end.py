import functools
import math

import numpy as np
import pytest

from frontseek.cli import EXIT_OK, cli
from frontseek.cli.commands import _run_algorithm, _seeds
from frontseek.frontseek_dataclasses import ExperimentConfig
from frontseek.optimizer import initial_calculation
from frontseek.problems import lookup, reference_front_volume
from frontseek.utils import read_csv

SEEDS = range(10)


@functools.lru_cache(maxsize=None)
def _true_volume(problem: str) -> float:
    return reference_front_volume(lookup(problem)).volume


@functools.lru_cache(maxsize=None)
def _evaluations(problem: str, algorithm: str, n_seq: int, seed: int, dv: float, max_evals: int) -> float:
    """Total evaluations until the relative volume reaches `dv`, inf if it never does."""
    config = ExperimentConfig(
        problem=problem,
        algorithm=algorithm,
        n_seq=n_seq,
        seed=seed,
        stop={'max_evaluations': max_evals, 'target_relative_volume': dv},
    )
    initial_seed, algorithm_seed = _seeds(seed)
    initial = initial_calculation(lookup(problem), None, initial_seed)
    _, record = _run_algorithm(config, lookup(problem), initial, _true_volume(problem), algorithm_seed)
    return record.last.evals if record.last.dv >= dv else math.inf


@pytest.mark.slow
def test_bnh_reaches_80_percent_quickly():
    evals = [_evaluations('BNH', 'adaptive', 1, seed, 0.8, 30) for seed in SEEDS]
    assert sum(e <= 40 for e in evals) >= 8, evals


@pytest.mark.slow
def test_cir_reaches_80_percent():
    evals = [_evaluations('CIR', 'adaptive', 1, seed, 0.8, 140) for seed in SEEDS]
    assert sum(e <= 150 for e in evals) >= 8, evals


@pytest.mark.slow
@pytest.mark.parametrize('problem', ['BNH', 'SRN'])
def test_adaptive_needs_fewer_evaluations_than_nsgaii(problem):
    adaptive = [_evaluations(problem, 'adaptive', 1, seed, 0.9, 200) for seed in SEEDS]
    nsgaii = [_evaluations(problem, 'nsgaii', 1, seed, 0.9, 2000) for seed in SEEDS]
    assert np.median(adaptive) < np.median(nsgaii)


@pytest.mark.slow
def test_batches_degrade_gracefully():
    single = [_evaluations('BNH', 'adaptive', 1, seed, 0.8, 100) for seed in SEEDS]
    batched = [_evaluations('BNH', 'adaptive', 5, seed, 0.8, 100) for seed in SEEDS]
    assert np.median(batched) <= 2 * np.median(single)


@pytest.mark.slow
def test_osy_smoke():
    problem = lookup('OSY')
    config = ExperimentConfig(problem='OSY', seed=1, stop={'max_evaluations': 50})
    initial_seed, algorithm_seed = _seeds(1)
    initial = initial_calculation(problem, None, initial_seed)
    dataset, record = _run_algorithm(config, problem, initial, None, algorithm_seed)
    assert len(dataset) == problem.n0 + 50
    assert math.isnan(record.last.dv)


@pytest.mark.slow
def test_cli_run_reaches_target(tmp_path):
    status = cli(
        [
            'run',
            '--problem', 'BNH',
            '--target-dv', '0.8',
            '--max-evals', '100',
            '--seed', '7',
            '--output-dir', str(tmp_path),
        ]
    )
    assert status == EXIT_OK
    assert read_csv(tmp_path / 'front.csv')
    assert float(read_csv(tmp_path / 'results.csv')[-1]['dv']) >= 0.8
