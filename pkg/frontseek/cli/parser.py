import argparse

from frontseek import __version__
from frontseek.constants import DV_THRESHOLDS, Algorithms, OracleSuites, ProblemNames


def _float_list(text: str):
    try:
        return [float(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma separated numbers, got {text!r}')


def _int_list(text: str):
    try:
        return [int(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma separated integers, got {text!r}')


def set_base_parser():
    """Set the base parser
    :return: the parser
    """
    parser = argparse.ArgumentParser(
        epilog='frontseek - adaptive multi-objective optimization with binary '
        'feasibility constraints.',
        formatter_class=_chf,
        description='Command Line Interface of `%(prog)s`',
    )
    parser.add_argument(
        '-v',
        '--version',
        action='version',
        version=__version__,
        help='Show frontseek version',
    )
    return parser


def _add_problem_argument(parser, required: bool):
    parser.add_argument(
        '--problem',
        choices=sorted(ProblemNames()),
        required=required,
        help='Benchmark problem of the registry.',
    )


def set_run_parser(sp):
    """Add the arguments of a single optimization run
    :param sp: the sub-parsers of the main parser
    """
    parser = sp.add_parser(
        'run',
        help='Run one seeded optimization and write its result bundle.',
        description='Run one seeded optimization and write results.csv, front.csv, '
        'dataset.csv and config.yml into the output directory. Flags override the '
        'values of the config file.',
        formatter_class=_chf,
    )
    parser.add_argument('--config', type=str, help='Flat YAML file with dotted keys.')
    _add_problem_argument(parser, required=False)
    parser.add_argument('--algo', choices=list(Algorithms()), help='Optimization algorithm.')
    parser.add_argument('--nseq', type=int, help='Suggestions per outer iteration.')
    parser.add_argument('--n0', type=int, help='Size of the initial calculation.')
    parser.add_argument(
        '--max-evals',
        type=int,
        help='Evaluations allowed after the initial calculation.',
    )
    parser.add_argument(
        '--target-dv', type=float, help='Stop once the relative volume reaches this value.'
    )
    parser.add_argument('--seed', type=int, help='Seed of the run.')
    parser.add_argument('--output-dir', type=str, help='Directory of the result bundle.')
    parser.add_argument('--workers', type=int, help='Threads evaluating a batch.')
    parser.add_argument(
        '--weights', type=_float_list, help='Acquisition weights w_opt,w_con,w_exp.'
    )
    parser.add_argument('--gamma', type=float, help='Expected improvement scale.')
    parser.add_argument('--sigma-ref', type=float, help='Truncation ellipsoid size.')
    parser.add_argument('--epsilon', type=float, help='Repulsion strength.')
    parser.add_argument(
        '--resolution', type=int, help='Samples of the reference front volume.'
    )


def set_bench_parser(sp):
    """Add the arguments of a replicated benchmark
    :param sp: the sub-parsers of the main parser
    """
    parser = sp.add_parser(
        'bench',
        help='Compare the adaptive optimizer and NSGA-II over replicates.',
        description='Run both algorithms from the same initial datasets and report '
        'mean and std of the evaluations needed per relative volume threshold.',
        formatter_class=_chf,
    )
    _add_problem_argument(parser, required=True)
    parser.add_argument('--replicates', type=int, help='Number of seeds, 0..replicates-1.')
    parser.add_argument('--seeds', type=_int_list, help='Explicit seed list.')
    parser.add_argument(
        '--dv',
        type=_float_list,
        help=f'Relative volume thresholds, default {",".join(map(str, DV_THRESHOLDS))}.',
    )
    parser.add_argument('--nseq', type=int, help='Suggestions per adaptive iteration.')
    parser.add_argument(
        '--max-evals', type=int, help='Adaptive evaluations after the initial calculation.'
    )
    parser.add_argument(
        '--nsgaii-max-evals', type=int, help='NSGA-II evaluations after the initial calculation.'
    )
    parser.add_argument('--population', type=int, help='NSGA-II population.')
    parser.add_argument('--nsim', type=int, help='Parallel simulations of the runtime model.')
    parser.add_argument('--tsim', type=float, help='Seconds per simulation of the runtime model.')
    parser.add_argument('--workers', type=int, help='Replicates run concurrently.')
    parser.add_argument('--output-dir', type=str, help='Directory of the CSV tables.')
    parser.add_argument(
        '--resolution', type=int, help='Samples of the reference front volume.'
    )


def set_oracle_parser(sp):
    parser = sp.add_parser(
        'oracle',
        help='Check the closed forms against sampling and quadrature.',
        description='Check the closed forms against sampling and quadrature. '
        'Exits with status 1 if any instance fails.',
        formatter_class=_chf,
    )
    parser.add_argument('suite', choices=list(OracleSuites()), help='Oracle suite.')
    parser.add_argument('--instances', type=int, help='Random instances.')
    parser.add_argument('--draws', type=int, help='Monte-Carlo draws per instance.')
    parser.add_argument('--seed', type=int, help='Seed of the instances.')


def set_problems_parser(sp):
    sp.add_parser(
        'problems',
        help='List the benchmark problems and their default parameters.',
        description='List the benchmark problems and their default parameters.',
        formatter_class=_chf,
    )


def get_main_parser():
    """The main parser for frontseek
    :return: the parser
    """
    parser = set_base_parser()
    sp = parser.add_subparsers(
        dest='cli',
        description='use `%(prog)-8s [sub-command] --help` '
        'to get additional arguments to be used with each sub-command',
        required=True,
    )

    set_run_parser(sp)
    set_bench_parser(sp)
    set_oracle_parser(sp)
    set_problems_parser(sp)

    return parser


_chf = argparse.RawDescriptionHelpFormatter
