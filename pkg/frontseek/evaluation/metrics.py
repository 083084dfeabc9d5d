from __future__ import annotations

import dataclasses
import math
from typing import List, Tuple

import numpy as np

from frontseek.core.dominance import pareto_subset
from frontseek.core.hypervolume import hypervolume
from frontseek.errors import ContractViolation, NotApplicable
from frontseek.evaluation.records import RunRecord


def relative_dominated_volume(D_y_star, ref, true_volume: float) -> float:
    """Dominated volume of the feasible front relative to the true front's."""
    if not true_volume > 0:
        raise ContractViolation(f'true volume must be positive, got {true_volume}')
    ref = np.asarray(ref, dtype=float).reshape(-1)
    Y = np.asarray(D_y_star, dtype=float)
    if Y.size == 0:
        return 0.0
    volume = hypervolume(pareto_subset(Y.reshape(-1, ref.size)), ref)
    return float(np.clip(volume / true_volume, 0.0, 1.0))


def effective_runtime(n_seq: int, n_sim: int, n_iter: int, t_sim: float, t_pure: float) -> float:
    """
    Wall time of a run when `n_sim` simulations of `t_sim` seconds each can
    run in parallel and every iteration evaluates `n_seq` points.
    """
    if min(n_seq, n_iter, t_sim, t_pure) < 0 or n_sim < 1:
        raise ContractViolation('runtime inputs must be nonnegative with n_sim >= 1')
    return t_sim * math.ceil(n_seq / n_sim) * n_iter + t_pure


def effective_runtime_curve(record: RunRecord, n_sim: int, t_sim: float) -> List[Tuple[float, float]]:
    """(effective runtime, relative volume) after every iteration of `record`."""
    return [
        (effective_runtime(record.n_seq, n_sim, row.iter, t_sim, row.t_pure_s), row.dv)
        for row in record.rows
    ]


def evaluations_to_threshold(record: RunRecord, dv_threshold: float) -> int:
    return record.evaluations_to_threshold(dv_threshold)


@dataclasses.dataclass(frozen=True)
class BreakEvenResult:
    """
    Fields
    ------
    dv : relative volume threshold.
    n_iter : iterations to the threshold, (adaptive, nsgaii).
    t_pure : cumulative pure runtime at the threshold, (adaptive, nsgaii).
    nu : evaluations after the initial calculation, (adaptive, nsgaii).
    tau : simulation time per evaluation above which the adaptive run is faster.
    """

    dv: float
    n_iter: Tuple[int, int]
    t_pure: Tuple[float, float]
    nu: Tuple[int, int]
    tau: float

    def __str__(self):
        return (
            f'dv={self.dv:.2f} tau={self.tau:.6g}s '
            f'n_iter={self.n_iter} nu={self.nu} t_pure={self.t_pure}'
        )


def break_even_time(rec_adaptive: RunRecord, rec_nsgaii: RunRecord, dv: float) -> BreakEvenResult:
    rows = rec_adaptive.first_reaching(dv), rec_nsgaii.first_reaching(dv)
    nu = rec_adaptive.n_seq * rows[0].iter, rec_nsgaii.n_seq * rows[1].iter
    if nu[1] - nu[0] <= 0:
        raise NotApplicable(
            f'nsgaii needs more evaluations than the adaptive run, got nu={nu}'
        )
    tau = (rows[0].t_pure_s - rows[1].t_pure_s) / (nu[1] - nu[0])
    return BreakEvenResult(
        dv=dv,
        n_iter=(rows[0].iter, rows[1].iter),
        t_pure=(rows[0].t_pure_s, rows[1].t_pure_s),
        nu=nu,
        tau=tau,
    )
