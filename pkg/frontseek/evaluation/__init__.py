from frontseek.evaluation.metrics import (
    BreakEvenResult,
    break_even_time,
    effective_runtime,
    effective_runtime_curve,
    evaluations_to_threshold,
    relative_dominated_volume,
)
from frontseek.evaluation.nsgaii import NSGAIIResult, nsgaii_optimize, nsgaii_run
from frontseek.evaluation.oracles import (
    oracle_mc_evi,
    oracle_mc_hypervolume,
    oracle_mc_pnd,
    quadrature_I1,
    quadrature_I2,
    quadrature_I3,
)
from frontseek.evaluation.records import RecordRow, RunRecord
from frontseek.evaluation.suites import OracleCase, OracleReport, run_oracle_suite
