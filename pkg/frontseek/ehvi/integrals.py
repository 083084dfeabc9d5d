"""
One-dimensional Gaussian moment integrals in closed form, with the Dirac
limits used once the standard deviation falls below numerical precision.
"""
from __future__ import annotations

import numpy as np
from scipy.special import erf

from frontseek.constants import DIRAC_SIGMA
from frontseek.errors import ContractViolation

_SQRT2 = np.sqrt(2.0)
_SQRT2PI = np.sqrt(2.0 * np.pi)


def heaviside(x, at_zero: float = 0.5):
    return np.heaviside(x, at_zero)


def _prepare(mu, sigma):
    mu = np.asarray(mu, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    if np.any(sigma < 0):
        raise ContractViolation('standard deviation must be nonnegative')
    dirac = sigma <= DIRAC_SIGMA
    return mu, np.where(dirac, 1.0, sigma), dirac


def _result(value):
    value = np.asarray(value, dtype=float)
    return float(value) if value.ndim == 0 else value


def _check_order(a, b):
    if np.any(np.asarray(a) > np.asarray(b)):
        raise ContractViolation('integration bounds must satisfy a <= b')


def _first_moment(a, b, c, mu, safe_sigma):
    za = (a - mu) / (_SQRT2 * safe_sigma)
    zb = (b - mu) / (_SQRT2 * safe_sigma)
    return 0.5 * (mu - c) * (erf(zb) - erf(za)) + safe_sigma / _SQRT2PI * (
        np.exp(-za * za) - np.exp(-zb * zb)
    )


def gaussian_integral_I1(a, b, c, mu, sigma):
    """Integral of (y - c) N(y | mu, sigma^2) over [a, b]."""
    a, b, c = (np.asarray(v, dtype=float) for v in (a, b, c))
    _check_order(a, b)
    mu, safe_sigma, dirac = _prepare(mu, sigma)
    closed = _first_moment(a, b, c, mu, safe_sigma)
    limit = (mu - c) * heaviside(b - mu) * heaviside(mu - a)
    return _result(np.where(dirac, limit, closed))


def gaussian_integral_I2(b, c, mu, sigma):
    """Integral of (y - c) N(y | mu, sigma^2) over (-inf, b]."""
    b, c = (np.asarray(v, dtype=float) for v in (b, c))
    mu, safe_sigma, dirac = _prepare(mu, sigma)
    zb = (b - mu) / (_SQRT2 * safe_sigma)
    closed = 0.5 * (mu - c) * (erf(zb) + 1.0) - safe_sigma / _SQRT2PI * np.exp(
        -zb * zb
    )
    limit = (mu - c) * heaviside(b - mu)
    return _result(np.where(dirac, limit, closed))


def gaussian_integral_I3(a, b, mu, sigma):
    """Probability mass of N(mu, sigma^2) on [a, b]."""
    a, b = (np.asarray(v, dtype=float) for v in (a, b))
    _check_order(a, b)
    mu, safe_sigma, dirac = _prepare(mu, sigma)
    closed = 0.5 * (
        erf((b - mu) / (_SQRT2 * safe_sigma)) - erf((a - mu) / (_SQRT2 * safe_sigma))
    )
    limit = heaviside(b - mu) * heaviside(mu - a)
    return _result(np.where(dirac, limit, closed))


def mass_below(b, mu, sigma):
    """Probability mass of N(mu, sigma^2) on (-inf, b]."""
    b = np.asarray(b, dtype=float)
    mu, safe_sigma, dirac = _prepare(mu, sigma)
    closed = 0.5 * (1.0 + erf((b - mu) / (_SQRT2 * safe_sigma)))
    return _result(np.where(dirac, heaviside(b - mu), closed))


def prob_at_least(y, mu, sigma):
    """P(Y >= y) for Y ~ N(mu, sigma^2); the Dirac limit counts Y = y as a hit."""
    y = np.asarray(y, dtype=float)
    mu, safe_sigma, dirac = _prepare(mu, sigma)
    closed = 0.5 * (1.0 - erf((y - mu) / (_SQRT2 * safe_sigma)))
    return _result(np.where(dirac, heaviside(mu - y, 1.0), closed))
