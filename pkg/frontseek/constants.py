from __future__ import annotations

from frontseek.utils import BetterEnum


class RegressorKinds(BetterEnum):
    GP_MATERN = 'gp_matern'
    BAYES_RIDGE_POLY = 'bayes_ridge_poly'


class Algorithms(BetterEnum):
    ADAPTIVE = 'adaptive'
    NSGAII = 'nsgaii'


class OracleSuites(BetterEnum):
    INTEGRALS = 'integrals'
    EVI = 'evi'
    PND = 'pnd'
    HV = 'hv'
    TRUNCATION = 'truncation'


class ProblemNames(BetterEnum):
    BNH = 'BNH'
    SRN = 'SRN'
    OSY = 'OSY'
    CEX = 'CEX'
    FFF = 'FFF'
    CIR = 'CIR'


# below this standard deviation the normal density is replaced by its Dirac limit
DIRAC_SIGMA = 1e-150
# floor of the relative volume used to rescale the expected improvement
GAMMA_FLOOR = 1e-12
# zero semi-axes of the truncation ellipsoid need an exact hit within this tolerance
ELLIPSOID_TOL = 1e-12

GP_JITTER = 1e-10
GP_RESTARTS = 16
POLY_DEGREE = 3
RIDGE_MAX_ITER = 100
RIDGE_TOL = 1e-6

FANTASY_FEASIBLE_THRESHOLD = 0.5
DIAMETER_RANDOM_PAIRS = 10_000

DEFAULT_REFERENCE_RESOLUTION = 10**6
OSY_REFERENCE_RESOLUTION = 10**7
REFERENCE_CHUNK = 10**6

DV_THRESHOLDS = (0.80, 0.85, 0.90, 0.95)

RESULTS_CSV_HEADER = ['iter', 'evals', 'dv', 't_pure_s', 't_model_s', 't_acq_s']
FRONT_CSV = 'front.csv'
DATASET_CSV = 'dataset.csv'
RESULTS_CSV = 'results.csv'
CONFIG_ECHO = 'config.yml'
