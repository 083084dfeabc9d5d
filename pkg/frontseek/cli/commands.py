"""
The work behind the CLI sub-commands. Every command is deterministic for a
fixed seed and configuration; the initial dataset and the algorithm draw from
independent children of the run seed.
"""
from __future__ import annotations

import dataclasses
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from frontseek import __version__
from frontseek.constants import (
    CONFIG_ECHO,
    DATASET_CSV,
    DV_THRESHOLDS,
    FRONT_CSV,
    RESULTS_CSV,
    Algorithms,
)
from frontseek.core.data import Dataset
from frontseek.core.dominance import pareto_mask
from frontseek.errors import NotApplicable, ThresholdUnreached
from frontseek.evaluation import (
    RunRecord,
    break_even_time,
    effective_runtime_curve,
    nsgaii_optimize,
    run_oracle_suite,
)
from frontseek.evaluation.suites import OracleReport
from frontseek.frontseek_dataclasses import ExperimentConfig, StoppingCriterion
from frontseek.log import step, time_profiler
from frontseek.optimizer import initial_calculation, optimize
from frontseek.problems import list_problems, lookup, reference_front_volume
from frontseek.problems.base import BenchmarkProblem
from frontseek.settings import get_output_dir
from frontseek.utils import read_config_file, write_config_file, write_csv

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_INSTANCES = {
    'integrals': 1000,
    'evi': 50,
    'pnd': 50,
    'hv': 200,
    'truncation': 50,
}
DEFAULT_ORACLE_DRAWS = 100_000
DEFAULT_BENCH_REPLICATES = 10
DEFAULT_BENCH_MAX_EVALS = 200
DEFAULT_BENCH_NSGAII_MAX_EVALS = 2000

_RUN_FLAGS = {
    'problem': 'problem',
    'algo': 'algorithm',
    'nseq': 'n_seq',
    'n0': 'n0',
    'seed': 'seed',
    'output_dir': 'output_dir',
    'workers': 'n_workers',
    'resolution': 'reference_resolution',
}
_ACQUISITION_FLAGS = {
    'weights': 'weights',
    'gamma': 'gamma',
    'sigma_ref': 'sigma_ref',
    'epsilon': 'epsilon',
}
_STOP_FLAGS = {'max_evals': 'max_evaluations', 'target_dv': 'target_relative_volume'}


def build_experiment_config(kwargs: Dict[str, Any]) -> ExperimentConfig:
    """Config file values, overridden by the flags that were given."""
    content = read_config_file(kwargs['config']) if kwargs.get('config') else {}
    for flag, key in _RUN_FLAGS.items():
        if kwargs.get(flag) is not None:
            content[key] = kwargs[flag]
    for section, flags in (('acquisition', _ACQUISITION_FLAGS), ('stop', _STOP_FLAGS)):
        given = {key: kwargs[flag] for flag, key in flags.items() if kwargs.get(flag) is not None}
        if given:
            content[section] = {**(content.get(section) or {}), **given}
    content.setdefault('stop', {})
    return ExperimentConfig(**content)


@dataclasses.dataclass
class ResultBundle:
    """
    Everything a run leaves behind. The config echo read back with `--config`
    reproduces the run.
    """

    config: ExperimentConfig
    dataset: Dataset
    record: RunRecord
    version: str = __version__

    @property
    def front(self) -> List[Tuple[np.ndarray, np.ndarray]]:
        X, Y = self.dataset.xy_star
        if not len(Y):
            return []
        mask = pareto_mask(Y)
        return list(zip(X[mask], Y[mask]))

    def write(self, output_dir: str):
        d = self.dataset.x.shape[1]
        n = self.dataset.n_objectives
        x_cols = [f'x{j + 1}' for j in range(d)]
        y_cols = [f'y{i + 1}' for i in range(n)]
        self.record.to_csv(os.path.join(output_dir, RESULTS_CSV))
        write_csv(
            os.path.join(output_dir, FRONT_CSV),
            x_cols + y_cols,
            (list(x) + list(y) for x, y in self.front),
        )
        write_csv(
            os.path.join(output_dir, DATASET_CSV),
            x_cols + ['feasible'] + y_cols,
            (
                list(s.x) + [int(s.feasible)] + (list(s.y) if s.feasible else [''] * n)
                for s in self.dataset
            ),
        )
        write_config_file(
            self.config.dict(),
            os.path.join(output_dir, CONFIG_ECHO),
            header=f'frontseek {self.version}',
        )


def _seeds(seed: int):
    initial, algorithm = np.random.SeedSequence(seed).spawn(2)
    return initial, algorithm


def _budget(n0: int, stop: StoppingCriterion) -> StoppingCriterion:
    """The configured budget counts evaluations after the initial calculation."""
    if stop.max_evaluations is None:
        return stop
    return stop.copy(update={'max_evaluations': n0 + stop.max_evaluations})


def _reference_volume(problem: BenchmarkProblem, resolution: Optional[int]) -> float:
    with step(f'Sampling the {problem.name} reference front'):
        return reference_front_volume(problem, resolution).volume


def _run_algorithm(
    config: ExperimentConfig,
    problem: BenchmarkProblem,
    initial: Dataset,
    true_volume: float,
    seed,
) -> Tuple[Dataset, RunRecord]:
    stop = _budget(len(initial), config.stop)
    if config.algorithm == Algorithms.NSGAII:
        result = nsgaii_optimize(
            problem,
            config.nsgaii.population,
            initial,
            stop,
            seed,
            config.nsgaii,
            true_volume,
        )
        return result.dataset, result.record
    acquisition = config.acquisition.apply(
        problem.default_acquisition(config.n_seq), config.n_seq
    )
    _, state = optimize(
        problem,
        acquisition,
        config.n_seq,
        stop,
        seed,
        true_volume=true_volume,
        initial=initial,
        maximizer=config.maximizer,
        surrogate=config.surrogate,
        n_workers=config.n_workers,
    )
    return state.dataset, state.record


@time_profiler
def cmd_run(config: ExperimentConfig, true_volume: Optional[float] = None) -> ResultBundle:
    """Executes one seeded run and writes its bundle to the output directory."""
    problem = lookup(config.problem)
    if config.output_dir is None:
        config = config.copy(
            update={
                'output_dir': os.path.join(
                    get_output_dir(),
                    f'{problem.name}-{config.algorithm}-{config.n_seq}-seed{config.seed}',
                )
            }
        )
    if true_volume is None:
        true_volume = _reference_volume(problem, config.reference_resolution)
    initial_seed, algorithm_seed = _seeds(config.seed)
    initial = initial_calculation(problem, config.n0, initial_seed, config.n_workers)

    with step(f'Optimizing {problem.name} with {config.algorithm}'):
        dataset, record = _run_algorithm(config, problem, initial, true_volume, algorithm_seed)
    bundle = ResultBundle(config, dataset, record)
    bundle.write(config.output_dir)
    logger.info(
        f'{len(dataset)} evaluations, relative volume {record.last.dv:.4f}, '
        f'results in {config.output_dir}'
    )
    return bundle


@dataclasses.dataclass(frozen=True)
class BenchRow:
    """
    Fields
    ------
    algorithm : adaptive or nsgaii, or `tau` for the break-even rows.
    dv : relative volume threshold.
    mean : mean over the replicates that reached the threshold.
    std : sample std over those replicates, 0 for a single one.
    reached : replicates that reached the threshold.
    replicates : replicates run.
    """

    algorithm: str
    dv: float
    mean: float
    std: float
    reached: int
    replicates: int

    def __str__(self):
        if not self.reached:
            return f'{self.algorithm:>9}  dv={self.dv:.2f}  not reached (0/{self.replicates})'
        return (
            f'{self.algorithm:>9}  dv={self.dv:.2f}  {self.mean:10.4g} ± {self.std:<10.4g}'
            f'({self.reached}/{self.replicates})'
        )


def _mean_std(values: Sequence[float]) -> Tuple[float, float]:
    if not values:
        return float('nan'), float('nan')
    values = np.asarray(values, dtype=float)
    std = float(np.std(values, ddof=1)) if len(values) > 1 else 0.0
    return float(np.mean(values)), std


def _threshold_evaluations(record: RunRecord, dv: float) -> Optional[int]:
    try:
        return record.evaluations_to_threshold(dv)
    except ThresholdUnreached:
        return None


def _break_even(adaptive: RunRecord, nsgaii: RunRecord, dv: float) -> Optional[float]:
    try:
        return break_even_time(adaptive, nsgaii, dv).tau
    except (ThresholdUnreached, NotApplicable):
        return None


@time_profiler
def cmd_bench(
    problem: str,
    replicates: int = DEFAULT_BENCH_REPLICATES,
    dv_list: Sequence[float] = DV_THRESHOLDS,
    seeds: Optional[Sequence[int]] = None,
    n_seq: int = 1,
    max_evals: int = DEFAULT_BENCH_MAX_EVALS,
    nsgaii_max_evals: int = DEFAULT_BENCH_NSGAII_MAX_EVALS,
    population: int = 50,
    n_sim: Optional[int] = None,
    t_sim: Optional[float] = None,
    n_workers: int = 1,
    output_dir: Optional[str] = None,
    resolution: Optional[int] = None,
) -> List[BenchRow]:
    """
    Runs the adaptive optimizer and NSGA-II from the same initial dataset per
    seed and summarizes the evaluations needed per threshold. Writes one
    per-seed CSV per algorithm, plus effective-runtime curves if `n_sim` and
    `t_sim` are given.
    """
    seeds = list(seeds) if seeds else list(range(replicates))
    if len(seeds) < 1:
        raise ValueError('a benchmark needs at least one replicate')
    dv_list = sorted(dv_list)
    output_dir = output_dir or os.path.join(get_output_dir(), f'bench-{problem}')
    target = max(dv_list)
    configs = {
        Algorithms.ADAPTIVE: dict(
            algorithm=Algorithms.ADAPTIVE,
            n_seq=n_seq,
            stop=StoppingCriterion(max_evaluations=max_evals, target_relative_volume=target),
        ),
        Algorithms.NSGAII: dict(
            algorithm=Algorithms.NSGAII,
            nsgaii={'population': population},
            stop=StoppingCriterion(
                max_evaluations=nsgaii_max_evals, target_relative_volume=target
            ),
        ),
    }
    problem_instance = lookup(problem)
    true_volume = _reference_volume(problem_instance, resolution)

    def replicate(seed: int) -> Dict[str, RunRecord]:
        initial_seed, algorithm_seed = _seeds(seed)
        initial = initial_calculation(lookup(problem), None, initial_seed)
        records = {}
        for algorithm, overrides in configs.items():
            config = ExperimentConfig(problem=problem, seed=seed, **overrides)
            _, records[algorithm] = _run_algorithm(
                config, lookup(problem), initial, true_volume, algorithm_seed
            )
            records[algorithm].to_csv(
                os.path.join(output_dir, 'runs', f'{problem}-{algorithm}-seed{seed}.csv')
            )
        logger.info(f'{problem} replicate seed={seed} done')
        return records

    with step(f'Benchmarking {problem} over {len(seeds)} replicates'):
        if n_workers > 1:
            with ThreadPoolExecutor(max_workers=n_workers) as executor:
                runs = list(executor.map(replicate, seeds))
        else:
            runs = [replicate(seed) for seed in seeds]

    rows = []
    for algorithm in configs:
        table = []
        for seed, records in zip(seeds, runs):
            for dv in dv_list:
                table.append([seed, dv, _threshold_evaluations(records[algorithm], dv)])
        write_csv(
            os.path.join(output_dir, f'{problem}-{algorithm}.csv'),
            ['seed', 'dv', 'evals'],
            ([s, dv, '' if e is None else e] for s, dv, e in table),
        )
        for dv in dv_list:
            reached = [e for _, t, e in table if t == dv and e is not None]
            rows.append(BenchRow(algorithm, dv, *_mean_std(reached), len(reached), len(seeds)))
        if n_sim is not None and t_sim is not None:
            write_csv(
                os.path.join(output_dir, f'{problem}-{algorithm}-runtime.csv'),
                ['seed', 'iter', 't_eff_s', 'dv'],
                (
                    [seed, row.iter, t_eff, dv]
                    for seed, records in zip(seeds, runs)
                    for row, (t_eff, dv) in zip(
                        records[algorithm].rows,
                        effective_runtime_curve(records[algorithm], n_sim, t_sim),
                    )
                ),
            )
    for dv in dv_list:
        taus = [
            tau
            for records in runs
            for tau in [_break_even(records[Algorithms.ADAPTIVE], records[Algorithms.NSGAII], dv)]
            if tau is not None
        ]
        rows.append(BenchRow('tau', dv, *_mean_std(taus), len(taus), len(seeds)))
    return rows


@time_profiler
def cmd_oracle(
    suite: str,
    instances: Optional[int] = None,
    draws: int = DEFAULT_ORACLE_DRAWS,
    seed: int = 0,
) -> OracleReport:
    instances = instances or DEFAULT_ORACLE_INSTANCES[suite]
    with step(f'Running the {suite} oracle on {instances} instances'):
        return run_oracle_suite(suite, instances, draws, seed)


def cmd_problems() -> List[Dict[str, Any]]:
    return [lookup(name).describe() for name in list_problems()]
