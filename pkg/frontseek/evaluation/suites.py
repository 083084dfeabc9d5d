"""
Oracle suites comparing every closed form against its independent reference
on random instances. Each case records the deviation and whether it passed.
"""
from __future__ import annotations

import dataclasses
import logging
from typing import Callable, Dict, List

import numpy as np

from frontseek.acquisition.utilities import p_nondominated_batch
from frontseek.constants import OracleSuites
from frontseek.core.hypervolume import _hypervolume_grid, _hypervolume_sweep, hypervolume_improvement
from frontseek.decorators import timed
from frontseek.ehvi.expected import SectorDecomposition
from frontseek.ehvi.integrals import (
    gaussian_integral_I1,
    gaussian_integral_I2,
    gaussian_integral_I3,
)
from frontseek.ehvi.truncation import intersection_mask
from frontseek.evaluation.oracles import (
    oracle_mc_evi,
    oracle_mc_hypervolume,
    oracle_mc_pnd,
    quadrature_I1,
    quadrature_I2,
    quadrature_I3,
)
from frontseek.surrogates.base import NormalPrediction

logger = logging.getLogger(__name__)

STANDARD_ERRORS = 3.0
# floor for Monte-Carlo runs where every draw agrees and the standard error is 0
MC_ABS_FLOOR = 1e-6
INTEGRAL_TOL = 1e-10
TRUNCATION_LEVELS = (0.5, 1.0, 2.0, 3.0, 6.0, 50.0)


@dataclasses.dataclass(frozen=True)
class OracleCase:
    name: str
    closed: float
    reference: float
    tolerance: float
    informative: bool = False

    @property
    def deviation(self) -> float:
        return abs(self.closed - self.reference)

    @property
    def passed(self) -> bool:
        return self.informative or self.deviation <= self.tolerance


@dataclasses.dataclass
class OracleReport:
    suite: str
    cases: List[OracleCase] = dataclasses.field(default_factory=list)

    @property
    def failures(self) -> List[OracleCase]:
        return [case for case in self.cases if not case.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def max_deviation(self) -> float:
        asserted = [c.deviation for c in self.cases if not c.informative]
        return max(asserted) if asserted else 0.0

    def lines(self) -> List[str]:
        out = []
        for case in self.cases:
            status = 'info' if case.informative else ('pass' if case.passed else 'FAIL')
            out.append(
                f'{status:4s}  {case.name:40s}  closed={case.closed:.12g}  '
                f'reference={case.reference:.12g}  deviation={case.deviation:.3g}  '
                f'tol={case.tolerance:.3g}'
            )
        out.append(
            f'{self.suite}: {len(self.cases) - len(self.failures)}/{len(self.cases)} passed, '
            f'max deviation {self.max_deviation:.3g}'
        )
        return out


def mc_tolerance(error: float) -> float:
    return STANDARD_ERRORS * error + MC_ABS_FLOOR


def random_front(rng, size: int, n: int = 2) -> np.ndarray:
    """Mutually non-dominated points inside the unit box."""
    if size == 0:
        return np.empty((0, n))
    if n == 2:
        first = np.sort(rng.random(size))
        second = np.sort(rng.random(size))[::-1]
        return np.column_stack((first, second))
    points = rng.random((size, n))
    points /= points.sum(axis=1, keepdims=True)
    return points


def random_prediction(rng, n: int = 2, low: float = -0.2, high: float = 1.1) -> NormalPrediction:
    return NormalPrediction(rng.uniform(low, high, n), rng.uniform(0.02, 0.4, n))


def _integrals(instances: int, draws: int, rng) -> OracleReport:
    report = OracleReport(OracleSuites.INTEGRALS)
    for k in range(instances):
        mu = rng.uniform(-2, 2)
        sigma = (0.0, 1e-12, rng.uniform(0.05, 3.0))[k % 3]
        a, b = np.sort(rng.uniform(-4, 4, 2))
        c = rng.uniform(-3, 3)
        report.cases += [
            OracleCase(f'I1#{k}', gaussian_integral_I1(a, b, c, mu, sigma), quadrature_I1(a, b, c, mu, sigma), INTEGRAL_TOL),
            OracleCase(f'I2#{k}', gaussian_integral_I2(b, c, mu, sigma), quadrature_I2(b, c, mu, sigma), INTEGRAL_TOL),
            OracleCase(f'I3#{k}', gaussian_integral_I3(a, b, mu, sigma), quadrature_I3(a, b, mu, sigma), INTEGRAL_TOL),
        ]
    return report


def _evi(instances: int, draws: int, rng) -> OracleReport:
    report = OracleReport(OracleSuites.EVI)
    ref = np.ones(2)
    for k in range(instances):
        P = random_front(rng, k % 6)
        pred = random_prediction(rng)
        closed = SectorDecomposition(P, ref).expected_improvement(pred.mu, pred.sigma)[0]
        estimate, error = oracle_mc_evi(P, ref, pred, draws, rng)
        report.cases.append(
            OracleCase(f'evi#{k} |P|={len(P)}', closed, estimate, mc_tolerance(error))
        )
        # Dirac limit against the deterministic improvement
        dirac = SectorDecomposition(P, ref).expected_improvement(pred.mu, np.zeros(2))[0]
        report.cases.append(
            OracleCase(f'evi-dirac#{k}', dirac, hypervolume_improvement(P, ref, pred.mu), 1e-8)
        )
    return report


def _pnd(instances: int, draws: int, rng) -> OracleReport:
    report = OracleReport(OracleSuites.PND)
    for k in range(instances):
        n = 1 + k % 3
        size = 1 if k % 5 else 2 + k % 2
        P = random_front(rng, size, n)
        pred = random_prediction(rng, n, 0.0, 1.0)
        if k % 4 == 0:
            sigma = pred.sigma.copy()
            sigma[0] = 0.0
            pred = NormalPrediction(pred.mu, sigma)
        closed = p_nondominated_batch(P, pred.mu, pred.sigma)[0]
        estimate, error = oracle_mc_pnd(P, pred, draws, rng)
        report.cases.append(
            OracleCase(
                f'pnd#{k} n={n} |P|={size}',
                closed,
                estimate,
                mc_tolerance(error),
                informative=size > 1,
            )
        )
    return report


def _hv(instances: int, draws: int, rng) -> OracleReport:
    report = OracleReport(OracleSuites.HV)
    ref = np.ones(2)
    for k in range(instances):
        P = random_front(rng, 1 + k % 8)
        sweep = _hypervolume_sweep(P, ref)
        estimate, error = oracle_mc_hypervolume(P, ref, draws, rng)
        report.cases.append(OracleCase(f'hv-mc#{k}', sweep, estimate, mc_tolerance(error)))
        grid = _hypervolume_grid(P, ref)
        report.cases.append(OracleCase(f'hv-grid#{k}', sweep, grid, 1e-9 * max(abs(grid), 1.0)))
    return report


def _truncation(instances: int, draws: int, rng) -> OracleReport:
    report = OracleReport(OracleSuites.TRUNCATION)
    ref = np.ones(2)
    for k in range(instances):
        P = random_front(rng, 1 + k % 5)
        pred = random_prediction(rng)
        decomposition = SectorDecomposition(P, ref)
        exact = decomposition.expected_improvement(pred.mu, pred.sigma)[0]
        values = []
        for level in TRUNCATION_LEVELS:
            mask = intersection_mask(decomposition, pred.mu, pred.sigma, level)
            values.append(decomposition.expected_improvement(pred.mu, pred.sigma, mask)[0])
        scale = max(abs(exact), 1e-300)
        report.cases.append(OracleCase(f'trunc-50#{k}', values[-1], exact, 1e-9 * scale))
        # a dominated mean leaves only tail mass, which the ellipsoid cuts by construction
        tail_only = hypervolume_improvement(P, ref, pred.mu) <= 0
        report.cases.append(
            OracleCase(
                f'trunc-3#{k}',
                values[TRUNCATION_LEVELS.index(3.0)],
                exact,
                1e-2 * scale,
                informative=tail_only,
            )
        )
        decreases = max(0.0, max(a - b for a, b in zip(values[:-1], values[1:])))
        report.cases.append(OracleCase(f'trunc-monotone#{k}', decreases, 0.0, 1e-15))
    return report


_SUITES: Dict[str, Callable] = {
    OracleSuites.INTEGRALS: _integrals,
    OracleSuites.EVI: _evi,
    OracleSuites.PND: _pnd,
    OracleSuites.HV: _hv,
    OracleSuites.TRUNCATION: _truncation,
}


@timed
def run_oracle_suite(suite: str, instances: int, draws: int, seed: int = 0) -> OracleReport:
    if instances < 1:
        raise ValueError('an oracle suite needs at least one instance')
    report = _SUITES[suite](instances, draws, np.random.default_rng(seed))
    for case in report.cases:
        if case.informative:
            logger.info(f'{case.name}: closed form deviates from sampling by {case.deviation:.3g}')
    return report
