import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from frontseek.core.dominance import dominates, pareto_mask, pareto_subset
from frontseek.errors import ContractViolation

vectors = arrays(np.float64, 3, elements=st.integers(-3, 3).map(float))


@pytest.mark.parametrize(
    'a, b, expected',
    [
        ((1, 2), (2, 3), True),
        ((1, 2), (1, 2), False),
        ((1, 3), (2, 2), False),
        ((1, 2), (1, 3), True),
    ],
)
def test_dominates(a, b, expected):
    assert dominates(a, b) is expected


def test_dominates_length_mismatch():
    with pytest.raises(ContractViolation):
        dominates((1, 2), (1, 2, 3))


@given(vectors, vectors)
def test_dominance_is_antisymmetric(a, b):
    assert not (dominates(a, b) and dominates(b, a))


@given(vectors, vectors, vectors)
def test_dominance_is_transitive(a, b, c):
    if dominates(a, b) and dominates(b, c):
        assert dominates(a, c)


def test_pareto_subset_empty():
    assert pareto_subset(np.empty((0, 2))).shape == (0, 2)


def test_pareto_subset_drops_dominated_point():
    Y = np.array([[0, 2], [1, 1], [2, 0], [2, 2]], dtype=float)
    np.testing.assert_array_equal(pareto_subset(Y), Y[:3])


def test_pareto_subset_keeps_one_of_duplicates():
    Y = np.array([[1, 1], [1, 1], [0, 3]], dtype=float)
    np.testing.assert_array_equal(pareto_mask(Y), [True, False, True])


@pytest.mark.parametrize('n', [2, 3])
def test_pareto_subset_matches_pairwise_filter(rng, n):
    Y = rng.random((50, n))
    expected = [
        y for i, y in enumerate(Y)
        if not any(dominates(z, y) for j, z in enumerate(Y) if j != i)
    ]
    np.testing.assert_array_equal(pareto_subset(Y), np.array(expected))


@given(arrays(np.float64, (12, 2), elements=st.integers(0, 5).map(float)))
def test_pareto_subset_is_idempotent(Y):
    front = pareto_subset(Y)
    np.testing.assert_array_equal(pareto_subset(front), front)
