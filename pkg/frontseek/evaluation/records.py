"""
Per-iteration run records and their CSV form. A record row is written after
the initial calculation (iteration 0) and after every outer iteration.
"""
from __future__ import annotations

import dataclasses
import math
from typing import List, Optional

from frontseek.constants import RESULTS_CSV_HEADER
from frontseek.errors import ContractViolation, ThresholdUnreached
from frontseek.utils import read_csv, write_csv


@dataclasses.dataclass(frozen=True)
class RecordRow:
    """
    Fields
    ------
    iter : outer iteration (generation for NSGA-II), 0 after the initial calculation.
    evals : total number of evaluations so far.
    dv : relative dominated volume, NaN when no reference volume is known.
    t_pure_s : cumulative runtime without black-box evaluations.
    t_model_s : cumulative model fitting time.
    t_acq_s : cumulative acquisition maximization time.
    """

    iter: int
    evals: int
    dv: float
    t_pure_s: float
    t_model_s: float = 0.0
    t_acq_s: float = 0.0

    def as_list(self):
        return [getattr(self, name) for name in RESULTS_CSV_HEADER]


@dataclasses.dataclass
class RunRecord:
    algorithm: str
    n_seq: int
    rows: List[RecordRow] = dataclasses.field(default_factory=list)

    def append(self, row: RecordRow):
        if self.rows:
            last = self.rows[-1]
            if row.evals <= last.evals:
                raise ContractViolation('evaluation counts must strictly increase')
            if row.t_pure_s < last.t_pure_s:
                raise ContractViolation('cumulative runtime must not decrease')
        self.rows.append(row)

    def __len__(self):
        return len(self.rows)

    @property
    def last(self) -> Optional[RecordRow]:
        return self.rows[-1] if self.rows else None

    def first_reaching(self, dv_threshold: float) -> RecordRow:
        for row in self.rows:
            if not math.isnan(row.dv) and row.dv >= dv_threshold:
                return row
        raise ThresholdUnreached(
            f'{self.algorithm} never reaches relative volume {dv_threshold}'
        )

    def evaluations_to_threshold(self, dv_threshold: float) -> int:
        return self.first_reaching(dv_threshold).evals

    def adaptive_evaluations(self, dv_threshold: float) -> int:
        """Evaluations after the initial calculation, N_seq times the iterations."""
        return self.n_seq * self.first_reaching(dv_threshold).iter

    def to_csv(self, path):
        write_csv(path, RESULTS_CSV_HEADER, (row.as_list() for row in self.rows))

    @classmethod
    def from_csv(cls, path, algorithm: str, n_seq: int) -> 'RunRecord':
        record = cls(algorithm, n_seq)
        for line in read_csv(path):
            record.rows.append(
                RecordRow(
                    iter=int(line['iter']),
                    evals=int(line['evals']),
                    dv=float(line['dv']),
                    t_pure_s=float(line['t_pure_s']),
                    t_model_s=float(line['t_model_s']),
                    t_acq_s=float(line['t_acq_s']),
                )
            )
        return record
