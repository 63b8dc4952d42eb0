from .memo import Memo
from .resources import get_peak_memory_mb, get_uptime, runtime_info

__all__ = ["Memo", "get_peak_memory_mb", "get_uptime", "runtime_info"]
