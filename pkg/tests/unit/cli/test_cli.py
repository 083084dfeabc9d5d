import os

import pytest

from frontseek.cli import EXIT_OK, EXIT_USAGE, EXIT_VALIDATION_FAILURE, cli
from frontseek.cli.commands import build_experiment_config, cmd_bench
from frontseek.cli.parser import get_main_parser
from frontseek.evaluation import RecordRow, RunRecord
from frontseek.evaluation.suites import OracleCase, OracleReport
from frontseek.frontseek_dataclasses import ExperimentConfig
from frontseek.utils import read_config_file, read_csv


@pytest.fixture()
def no_reference(mocker):
    return mocker.patch('frontseek.cli.commands._reference_volume', return_value=1.0)


def _run_cir(tmp_path, seed=3):
    return cli(
        [
            'run',
            '--problem', 'CIR',
            '--algo', 'nsgaii',
            '--max-evals', '100',
            '--seed', str(seed),
            '--output-dir', str(tmp_path),
        ]
    )


def test_parse_run_flags():
    args = get_main_parser().parse_args(
        ['run', '--problem', 'BNH', '--nseq', '5', '--weights', '0,1,0', '--target-dv', '0.8']
    )
    assert args.cli == 'run'
    assert args.nseq == 5
    assert args.weights == [0.0, 1.0, 0.0]
    assert args.target_dv == 0.8


def test_unknown_problem_is_a_usage_error():
    with pytest.raises(SystemExit) as e:
        cli(['run', '--problem', 'XXX'])
    assert e.value.code == 2


def test_missing_stopping_criterion():
    assert cli(['run', '--problem', 'BNH']) == EXIT_USAGE


def test_problems(capsys):
    assert cli(['problems']) == EXIT_OK
    out = capsys.readouterr().out
    assert out.count('\n') == 6
    assert 'BNH: d=2 n=2' in out


def test_failing_oracle_exit_status(mocker):
    report = OracleReport('hv', [OracleCase('hv#0', 1.0, 0.0, 0.1)])
    mocker.patch('frontseek.cli.commands.run_oracle_suite', return_value=report)
    assert cli(['oracle', 'hv', '--instances', '1']) == EXIT_VALIDATION_FAILURE


def test_config_file_with_flag_overrides(tmp_path):
    path = tmp_path / 'experiment.yml'
    path.write_text(
        'problem: SRN\n'
        'n_seq: 2\n'
        'stop.max_evaluations: 40\n'
        'acquisition.gamma: 3.0\n'
        'maximizer.generations: 10\n'
    )
    config = build_experiment_config(
        {'config': str(path), 'nseq': 4, 'target_dv': 0.9, 'epsilon': 0.5}
    )
    assert config.problem == 'SRN'
    assert config.n_seq == 4
    assert config.stop.max_evaluations == 40
    assert config.stop.target_relative_volume == 0.9
    assert config.acquisition.gamma == 3.0
    assert config.acquisition.epsilon == 0.5
    assert config.maximizer.generations == 10


def test_run_writes_the_bundle(tmp_path, no_reference):
    assert _run_cir(tmp_path) == EXIT_OK
    assert sorted(os.listdir(tmp_path)) == ['config.yml', 'dataset.csv', 'front.csv', 'results.csv']
    results = read_csv(tmp_path / 'results.csv')
    assert [int(r['evals']) for r in results] == [10, 60, 110]
    dataset = read_csv(tmp_path / 'dataset.csv')
    assert len(dataset) == 110
    assert list(dataset[0]) == ['x1', 'x2', 'feasible', 'y1', 'y2']
    for row in dataset:
        assert (row['y1'] == '') == (row['feasible'] == '0')
    assert len(read_csv(tmp_path / 'front.csv')) >= 1


def test_config_echo_reproduces_the_run(tmp_path, no_reference):
    _run_cir(tmp_path / 'first')
    echo = tmp_path / 'first' / 'config.yml'
    assert echo.read_text().startswith('# frontseek ')
    config = ExperimentConfig(**read_config_file(echo))
    assert config.problem == 'CIR' and config.stop.max_evaluations == 100

    assert cli(['run', '--config', str(echo), '--output-dir', str(tmp_path / 'second')]) == EXIT_OK
    for name in ('dataset.csv', 'front.csv'):
        first = (tmp_path / 'first' / name).read_text()
        assert first == (tmp_path / 'second' / name).read_text()


def _synthetic_run(config, problem, initial, true_volume, seed):
    n0 = len(initial)
    if config.algorithm == 'adaptive':
        record = RunRecord('adaptive', 1, [RecordRow(0, n0, 0.5, 0.0), RecordRow(20, n0 + 20, 0.96, 5.0)])
    else:
        record = RunRecord('nsgaii', 50, [RecordRow(0, n0, 0.5, 0.0), RecordRow(4, n0 + 200, 0.96, 1.0)])
    return initial, record


def test_bench_single_replicate(tmp_path, no_reference, mocker):
    mocker.patch('frontseek.cli.commands._run_algorithm', side_effect=_synthetic_run)
    rows = cmd_bench('BNH', replicates=1, dv_list=[0.8, 0.9], n_sim=5, t_sim=60.0, output_dir=str(tmp_path))
    by_key = {(row.algorithm, row.dv): row for row in rows}
    assert by_key['adaptive', 0.8].mean == 30 and by_key['adaptive', 0.8].std == 0.0
    assert by_key['nsgaii', 0.9].mean == 210
    assert by_key['tau', 0.9].mean == pytest.approx(4.0 / 180.0)
    assert by_key['tau', 0.9].reached == 1
    assert (tmp_path / 'BNH-adaptive.csv').exists()
    assert (tmp_path / 'runs' / 'BNH-nsgaii-seed0.csv').exists()
    runtime = read_csv(tmp_path / 'BNH-nsgaii-runtime.csv')
    assert float(runtime[1]['t_eff_s']) == pytest.approx(60 * 10 * 4 + 1.0)


def test_bench_unreached_threshold(tmp_path, no_reference, mocker):
    mocker.patch('frontseek.cli.commands._run_algorithm', side_effect=_synthetic_run)
    rows = cmd_bench('BNH', seeds=[4, 5], dv_list=[0.99], output_dir=str(tmp_path))
    assert all(row.reached == 0 for row in rows)
    assert 'not reached (0/2)' in str(rows[0])
