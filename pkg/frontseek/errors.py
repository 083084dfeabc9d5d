class FrontseekError(Exception):
    """Base class of all errors raised by frontseek."""


class ContractViolation(FrontseekError, ValueError):
    """A precondition of an operation does not hold."""


class NotEnoughData(FrontseekError):
    """A model cannot be fitted on the given number of samples."""


class EmptyParetoSet(FrontseekError):
    """An operation needs at least one feasible objective vector."""


class ThresholdUnreached(FrontseekError):
    """A run record never reaches the requested relative volume."""


class NotApplicable(FrontseekError):
    """The break-even time is undefined for the given pair of runs."""


class EvaluationError(FrontseekError):
    """The black box failed; the run state up to the failure is attached."""

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state
