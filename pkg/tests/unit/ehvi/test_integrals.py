import numpy as np
import pytest

from frontseek.ehvi import gaussian_integral_I1, gaussian_integral_I2, gaussian_integral_I3
from frontseek.ehvi.integrals import mass_below, prob_at_least
from frontseek.errors import ContractViolation
from frontseek.evaluation.oracles import quadrature_I1, quadrature_I2, quadrature_I3


def test_I1_full_first_moment():
    assert gaussian_integral_I1(1 - 50, 1 + 50, 0, 1, 1) == pytest.approx(1.0, abs=1e-9)


def test_I1_dirac_limit():
    assert gaussian_integral_I1(0, 2, 0.5, 1, 0) == pytest.approx(0.5)


def test_I1_matches_quadrature():
    assert gaussian_integral_I1(0, 1, 0, 0.3, 0.7) == pytest.approx(
        quadrature_I1(0, 1, 0, 0.3, 0.7), abs=1e-10
    )


def test_I2_upper_tail_limit():
    assert gaussian_integral_I2(0.7 + 50 * 2, 0, 0.7, 2) == pytest.approx(0.7, abs=1e-9)


def test_I2_dirac_limit_mass_above_b():
    assert gaussian_integral_I2(0, 0, 1, 0) == 0.0


@pytest.mark.parametrize('mu, sigma', [(0.0, 1.0), (1.5, 0.3), (-2.0, 4.0)])
def test_I2_lower_half_first_moment(mu, sigma):
    expected = -sigma / np.sqrt(2 * np.pi)
    assert gaussian_integral_I2(mu, mu, mu, sigma) == pytest.approx(expected, abs=1e-12)


def test_I2_matches_quadrature():
    assert gaussian_integral_I2(0.4, -1, 0, 1) == pytest.approx(
        quadrature_I2(0.4, -1, 0, 1), abs=1e-10
    )


def test_I3_total_probability():
    assert gaussian_integral_I3(-50, 50, 0, 1) == pytest.approx(1.0, abs=1e-9)


def test_I3_dirac_limit():
    assert gaussian_integral_I3(0, 2, 1, 0) == 1.0


def test_I3_matches_quadrature():
    assert gaussian_integral_I3(-1, 0.5, 0, 2) == pytest.approx(
        quadrature_I3(-1, 0.5, 0, 2), abs=1e-10
    )


def test_random_tuples_match_quadrature(rng):
    for _ in range(200):
        a, b = np.sort(rng.uniform(-3, 3, 2))
        c, mu = rng.uniform(-3, 3, 2)
        sigma = rng.choice([0.0, 1e-12, rng.uniform(0.05, 3)])
        assert gaussian_integral_I1(a, b, c, mu, sigma) == pytest.approx(
            quadrature_I1(a, b, c, mu, sigma), abs=1e-10
        )
        assert gaussian_integral_I2(b, c, mu, sigma) == pytest.approx(
            quadrature_I2(b, c, mu, sigma), abs=1e-10
        )
        assert gaussian_integral_I3(a, b, mu, sigma) == pytest.approx(
            quadrature_I3(a, b, mu, sigma), abs=1e-10
        )


def test_dirac_half_weight_at_interval_end():
    assert gaussian_integral_I3(0, 1, 1, 0) == 0.5


@pytest.mark.parametrize(
    'call',
    [
        lambda: gaussian_integral_I1(1, 0, 0, 0, 1),
        lambda: gaussian_integral_I3(1, 0, 0, 1),
        lambda: gaussian_integral_I2(0, 0, 0, -1),
    ],
)
def test_contract_violations(call):
    with pytest.raises(ContractViolation):
        call()


def test_vectorized_inputs():
    values = gaussian_integral_I3(np.zeros(3), np.ones(3), np.array([0.5, 2, -1]), np.ones(3))
    assert values.shape == (3,)
    assert values[0] > values[1] > 0


def test_prob_at_least_counts_equality_in_dirac_limit():
    assert prob_at_least(1.0, 1.0, 0.0) == 1.0
    assert prob_at_least(0.0, 0.0, 1.0) == pytest.approx(0.5)
    assert mass_below(0.0, 0.0, 1.0) == pytest.approx(0.5)
