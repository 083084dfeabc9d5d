import logging
import logging.config
import sys
import warnings
from argparse import Namespace

from pydantic import ValidationError

from frontseek import __version__
from frontseek.errors import ContractViolation
from frontseek.settings import DEFAULT_LOGGING_CONFIG, get_log_level

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION_FAILURE = 1
EXIT_USAGE = 2


def _get_run_args(argv=None):
    from frontseek.cli.parser import get_main_parser

    parser = get_main_parser()
    if argv is None and len(sys.argv) == 1:
        parser.print_help()
        exit()
    args, unknown = parser.parse_known_args(argv)

    # clean up the args with None values
    args = {k: v for k, v in vars(args).items() if v is not None}
    args = Namespace(**args)

    if unknown:
        parser.error(f'unknown args: {unknown}')

    return args


def _configure_logging():
    config = dict(DEFAULT_LOGGING_CONFIG)
    config['root'] = {**config['root'], 'level': get_log_level()}
    logging.config.dictConfig(config)


def parse_args(args):
    if not isinstance(args, Namespace):
        args = _get_run_args(args)
    return vars(args)


def _run(kwargs):
    from frontseek.cli.commands import build_experiment_config, cmd_run

    bundle = cmd_run(build_experiment_config(kwargs))
    print(f'{len(bundle.front)} Pareto-optimal designs written to {bundle.config.output_dir}')
    return EXIT_OK


def _bench(kwargs):
    from frontseek.cli.commands import cmd_bench

    options = {
        'replicates': kwargs.get('replicates'),
        'dv_list': kwargs.get('dv'),
        'seeds': kwargs.get('seeds'),
        'n_seq': kwargs.get('nseq'),
        'max_evals': kwargs.get('max_evals'),
        'nsgaii_max_evals': kwargs.get('nsgaii_max_evals'),
        'population': kwargs.get('population'),
        'n_sim': kwargs.get('nsim'),
        't_sim': kwargs.get('tsim'),
        'n_workers': kwargs.get('workers'),
        'output_dir': kwargs.get('output_dir'),
        'resolution': kwargs.get('resolution'),
    }
    if options['replicates'] is not None and options['replicates'] < 1:
        raise ContractViolation('--replicates must be at least 1')
    rows = cmd_bench(kwargs['problem'], **{k: v for k, v in options.items() if v is not None})
    print(f'{kwargs["problem"]}: evaluations to reach dv (mean ± std), break-even tau in s')
    for row in rows:
        print(row)
    return EXIT_OK


def _oracle(kwargs):
    from frontseek.cli.commands import cmd_oracle

    options = {k: kwargs[k] for k in ('instances', 'draws', 'seed') if k in kwargs}
    if options.get('instances', 1) < 1:
        raise ContractViolation('--instances must be at least 1')
    report = cmd_oracle(kwargs['suite'], **options)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.passed else EXIT_VALIDATION_FAILURE


def _problems(kwargs):
    from frontseek.cli.commands import cmd_problems

    for info in cmd_problems():
        print(
            f'{info["name"]}: d={info["d"]} n={info["n"]} m={info["m"]} '
            f'n0={info["n0"]} y_ref={info["y_ref"]} w={info["weights"]} '
            f'epsilon={info["epsilon"]} gamma={info["gamma"]} '
            f'sigma_ref={info["sigma_ref"]} regressor={info["regressor"]}'
        )
    return EXIT_OK


_TASKS = {'run': _run, 'bench': _bench, 'oracle': _oracle, 'problems': _problems}


def cli(args=None):
    """The main entrypoint of the CLI, returns the exit status"""
    warnings.filterwarnings('ignore')
    kwargs = parse_args(args)
    _configure_logging()
    logger.debug(f'frontseek v{__version__}: {kwargs}')
    try:
        return _TASKS[kwargs['cli']](kwargs)
    except (ValidationError, ContractViolation) as e:
        print(f'usage error: {e}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(cli())
