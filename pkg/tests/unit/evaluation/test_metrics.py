import pytest

from frontseek.errors import ContractViolation, NotApplicable, ThresholdUnreached
from frontseek.evaluation import (
    RecordRow,
    RunRecord,
    break_even_time,
    effective_runtime,
    effective_runtime_curve,
    evaluations_to_threshold,
    relative_dominated_volume,
)
from frontseek.problems import lookup, reference_front_volume


def _record(algorithm, n_seq, rows):
    record = RunRecord(algorithm, n_seq)
    for row in rows:
        record.append(RecordRow(*row))
    return record


@pytest.mark.parametrize(
    'n_seq, n_sim, n_iter, t_sim, t_pure, expected',
    [(5, 5, 10, 60, 12, 612), (5, 1, 10, 60, 12, 3012), (5, 2, 10, 0, 12, 12)],
)
def test_effective_runtime(n_seq, n_sim, n_iter, t_sim, t_pure, expected):
    assert effective_runtime(n_seq, n_sim, n_iter, t_sim, t_pure) == expected


def test_effective_runtime_contract():
    with pytest.raises(ContractViolation):
        effective_runtime(1, 0, 1, 1, 1)


def test_break_even_time():
    adaptive = _record('adaptive', 1, [(0, 10, 0.1, 0.0), (40, 50, 0.85, 10.0)])
    nsgaii = _record('nsgaii', 50, [(0, 10, 0.1, 0.0), (4, 210, 0.82, 2.0)])
    result = break_even_time(adaptive, nsgaii, 0.8)
    assert result.nu == (40, 200)
    assert result.tau == pytest.approx(0.05)
    assert result.n_iter == (40, 4)


def test_break_even_time_equal_evaluations():
    adaptive = _record('adaptive', 5, [(0, 10, 0.1, 0.0), (10, 60, 0.9, 3.0)])
    nsgaii = _record('nsgaii', 50, [(0, 10, 0.1, 0.0), (1, 60, 0.9, 1.0)])
    with pytest.raises(NotApplicable):
        break_even_time(adaptive, nsgaii, 0.8)


def test_unreached_threshold():
    record = _record('adaptive', 1, [(0, 10, 0.1, 0.0), (1, 11, 0.5, 1.0)])
    with pytest.raises(ThresholdUnreached):
        evaluations_to_threshold(record, 0.8)
    assert evaluations_to_threshold(record, 0.5) == 11
    assert record.adaptive_evaluations(0.5) == 1


def test_effective_runtime_curve():
    record = _record('adaptive', 2, [(0, 10, 0.1, 0.0), (1, 12, 0.5, 1.5), (2, 14, 0.7, 4.0)])
    assert effective_runtime_curve(record, 1, 10.0) == [(0.0, 0.1), (21.5, 0.5), (44.0, 0.7)]


def test_relative_volume_of_empty_set():
    assert relative_dominated_volume([], (1, 1), 2.0) == 0.0


def test_relative_volume_needs_positive_true_volume():
    with pytest.raises(ContractViolation):
        relative_dominated_volume([[0, 0]], (1, 1), 0.0)


def test_reference_front_has_full_relative_volume():
    bnh = lookup('BNH')
    reference = reference_front_volume(bnh, 10**5)
    assert relative_dominated_volume(reference.front, bnh.y_ref, reference.volume) == pytest.approx(1.0, abs=0.01)
