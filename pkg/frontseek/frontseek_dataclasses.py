"""
Configuration models. Experiments are described by an `ExperimentConfig`,
read from flat YAML files with dotted keys and overridden from the command
line; the optimizer itself consumes the resolved `AcquisitionConfig`,
`MaximizerConfig`, `SurrogateConfig` and `NSGAIIConfig`.
"""
from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Extra, confloat, conint, root_validator, validator

from frontseek.constants import (
    GP_JITTER,
    GP_RESTARTS,
    POLY_DEGREE,
    RIDGE_MAX_ITER,
    RIDGE_TOL,
    Algorithms,
    ProblemNames,
    RegressorKinds,
)


class _Model(BaseModel):
    class Config:
        extra = Extra.forbid
        validate_assignment = True


class AcquisitionWeights(_Model):
    """
    Fields
    ------
    w_opt : weight of the optimization utility.
    w_con : weight of the constraint-finding utility.
    w_exp : weight of the explorative utility.
    """

    w_opt: confloat(ge=0) = 1.0
    w_con: confloat(ge=0) = 1.0
    w_exp: confloat(ge=0) = 1.0

    @root_validator(skip_on_failure=True)
    def _positive_norm(cls, values):
        if values['w_opt'] + values['w_con'] + values['w_exp'] <= 0:
            raise ValueError('acquisition weights must not all be zero')
        return values

    @classmethod
    def of(cls, w_opt: float, w_con: float, w_exp: float) -> 'AcquisitionWeights':
        return cls(w_opt=w_opt, w_con=w_con, w_exp=w_exp)

    @property
    def norm(self) -> float:
        return self.w_opt + self.w_con + self.w_exp

    def as_tuple(self):
        return self.w_opt, self.w_con, self.w_exp


class AcquisitionConfig(_Model):
    weights: AcquisitionWeights = AcquisitionWeights()
    gamma: confloat(gt=0) = 1.0
    sigma_ref: confloat(gt=0) = 1.0
    epsilon: confloat(ge=0) = 1.0
    y_ref: List[float]
    n_seq: conint(ge=1) = 1

    @validator('y_ref')
    def _non_empty(cls, v):
        if not v:
            raise ValueError('reference point needs at least one objective')
        return v


class MaximizerConfig(_Model):
    """
    Differential evolution followed by an L-BFGS-B polish on the unit cube.

    Fields
    ------
    population_per_dim : DE population per design dimension.
    max_population : cap on the total DE population.
    generations : DE generations.
    mutation : differential weight F.
    recombination : crossover probability CR.
    strategy : scipy DE strategy name.
    polish_maxfun : function evaluation budget of the polish.
    polish_eps : finite-difference step of the polish, in scaled coordinates.
    restarts : extra independent DE runs; the best incumbent of all runs is polished.
    """

    population_per_dim: conint(ge=1) = 15
    max_population: conint(ge=4) = 120
    generations: conint(ge=1) = 100
    mutation: confloat(gt=0, le=2) = 0.7
    recombination: confloat(ge=0, le=1) = 0.9
    strategy: str = 'best1bin'
    polish_maxfun: conint(ge=0) = 200
    polish_eps: confloat(gt=0) = 1e-6
    restarts: conint(ge=0) = 3


class SurrogateConfig(_Model):
    regressor: Optional[str] = None
    gp_restarts: conint(ge=1) = GP_RESTARTS
    gp_jitter: confloat(gt=0) = GP_JITTER
    poly_degree: conint(ge=1) = POLY_DEGREE
    ridge_max_iter: conint(ge=1) = RIDGE_MAX_ITER
    ridge_tol: confloat(gt=0) = RIDGE_TOL

    @validator('regressor')
    def _known_regressor(cls, v):
        if v is not None and v not in list(RegressorKinds()):
            raise ValueError(f'unknown regressor {v!r}, pick one of {list(RegressorKinds())}')
        return v


class NSGAIIConfig(_Model):
    population: conint(ge=4) = 50
    crossover_eta: confloat(gt=0) = 15.0
    crossover_rate: confloat(ge=0, le=1) = 0.9
    mutation_eta: confloat(gt=0) = 20.0
    # None means 1/d
    mutation_rate: Optional[confloat(ge=0, le=1)] = None

    @validator('population')
    def _even(cls, v):
        if v % 2:
            raise ValueError('NSGA-II population must be even')
        return v


class StoppingCriterion(_Model):
    max_evaluations: Optional[conint(ge=0)] = None
    target_relative_volume: Optional[confloat(ge=0, le=1)] = None

    @root_validator(skip_on_failure=True)
    def _at_least_one(cls, values):
        if values['max_evaluations'] is None and values['target_relative_volume'] is None:
            raise ValueError('set max_evaluations and/or target_relative_volume')
        return values


class AcquisitionOverrides(_Model):
    """Acquisition parameters replacing the problem defaults where set."""

    weights: Optional[List[confloat(ge=0)]] = None
    gamma: Optional[confloat(gt=0)] = None
    sigma_ref: Optional[confloat(gt=0)] = None
    epsilon: Optional[confloat(ge=0)] = None

    @validator('weights')
    def _three_weights(cls, v):
        if v is not None and (len(v) != 3 or sum(v) <= 0):
            raise ValueError('weights need three nonnegative entries with a positive sum')
        return v

    def apply(self, defaults: AcquisitionConfig, n_seq: int) -> AcquisitionConfig:
        update = {'n_seq': n_seq}
        if self.weights is not None:
            update['weights'] = AcquisitionWeights.of(*self.weights)
        for key in ('gamma', 'sigma_ref', 'epsilon'):
            if getattr(self, key) is not None:
                update[key] = getattr(self, key)
        return AcquisitionConfig(**{**defaults.dict(), **update})


class ExperimentConfig(_Model):
    problem: str
    algorithm: str = Algorithms.ADAPTIVE
    n_seq: conint(ge=1) = 1
    n0: Optional[conint(ge=1)] = None
    seed: int = 0
    output_dir: Optional[str] = None
    n_workers: conint(ge=1) = 1
    reference_resolution: Optional[conint(ge=10**5)] = None
    acquisition: AcquisitionOverrides = AcquisitionOverrides()
    stop: StoppingCriterion
    maximizer: MaximizerConfig = MaximizerConfig()
    surrogate: SurrogateConfig = SurrogateConfig()
    nsgaii: NSGAIIConfig = NSGAIIConfig()

    @validator('problem')
    def _known_problem(cls, v):
        if v not in list(ProblemNames()):
            raise ValueError(f'unknown problem {v!r}, pick one of {sorted(ProblemNames())}')
        return v

    @validator('algorithm')
    def _known_algorithm(cls, v):
        if v not in list(Algorithms()):
            raise ValueError(f'unknown algorithm {v!r}, pick one of {list(Algorithms())}')
        return v
