import os
import platform
import time

import psutil

from trickle.schemas.reports import RuntimeInfo


def get_uptime(round_to: int = 2) -> float:
    """Get uptime of the current process."""
    now = time.time()
    p = psutil.Process(os.getpid())
    return round(now - p.create_time(), round_to)


def get_peak_memory_mb(round_to: int = 1) -> float:
    """Get resident memory of the current process in megabytes."""
    p = psutil.Process(os.getpid())
    return round(p.memory_info().rss / 2**20, round_to)


def runtime_info(started: float) -> RuntimeInfo:
    """Describe the run that started at `started` (a `time.perf_counter` reading)."""
    from trickle import __version__  # noqa: PLC0415

    return RuntimeInfo(
        version=__version__,
        python=platform.python_version(),
        elapsed_seconds=round(time.perf_counter() - started, 3),
        uptime_seconds=get_uptime(),
        memory_mb=get_peak_memory_mb(),
    )
