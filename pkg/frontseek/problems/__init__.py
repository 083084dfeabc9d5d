from typing import List

from frontseek.core.data import Sample
from frontseek.errors import ContractViolation
from frontseek.problems.base import BenchmarkProblem
from frontseek.problems.benchmarks import BNH, CEX, CIR, FFF, OSY, PROBLEMS, SRN
from frontseek.problems.reference import TrueFrontReference, reference_front_volume


def list_problems() -> List[str]:
    return list(PROBLEMS)


def lookup(name: str) -> BenchmarkProblem:
    try:
        return PROBLEMS[name]()
    except KeyError:
        raise ContractViolation(
            f'unknown problem {name!r}, pick one of {list_problems()}'
        ) from None


def evaluate(problem: BenchmarkProblem, x) -> Sample:
    return problem.evaluate(x)
