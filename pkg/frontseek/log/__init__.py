from .log import step, time_profiler, yaspin_extended
