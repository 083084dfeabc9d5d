import logging
import time
from contextlib import contextmanager
from datetime import timedelta
from functools import wraps

from yaspin.core import Yaspin

from frontseek.settings import is_ci_run

logger = logging.getLogger(__name__)


def _format_elapsed(seconds: float) -> str:
    sec, fsec = divmod(round(100 * seconds), 100)
    return '{}.{:02.0f}'.format(timedelta(seconds=sec), fsec)


def yaspin_extended(*args, **kwargs):
    return YaspinExtended(*args, **kwargs)


class YaspinExtended(Yaspin):
    """
    Spinner for long CLI steps. In CI mode nothing is animated; the step is
    reported as one log line with its outcome and elapsed time on exit.
    """

    def __enter__(self):
        self._started = time.perf_counter()
        self._outcome = None
        if is_ci_run():
            return self
        return super().__enter__()

    def __exit__(self, exc_type, exc_val, traceback):
        if not is_ci_run():
            return super().__exit__(exc_type, exc_val, traceback)
        outcome = self._outcome or ('FAIL' if exc_type else 'OK')
        logger.info(
            f'{outcome} {self.text} ({_format_elapsed(time.perf_counter() - self._started)})'
        )

    def ok(self, text='OK'):
        if not is_ci_run():
            return super().ok(text=text)
        self._outcome = text

    def fail(self, text='FAIL'):
        if not is_ci_run():
            return super().fail(text=text)
        self._outcome = text


@contextmanager
def step(text: str):
    """Spinner around a block that ends in a tick or a cross."""
    with yaspin_extended(text=text, color='green') as spinner:
        try:
            yield spinner
        except BaseException:
            spinner.fail('✘')
            raise
        spinner.ok('✔')


def time_profiler(fun):
    """Logs the execution time of `fun` in CI mode."""

    @wraps(fun)
    def profiled_fun(*args, **kwargs):
        if not is_ci_run():
            return fun(*args, **kwargs)
        started = time.perf_counter()
        result = fun(*args, **kwargs)
        logger.info(
            f'{fun.__module__}.{fun.__name__} took '
            f'{_format_elapsed(time.perf_counter() - started)}'
        )
        return result

    return profiled_fun
