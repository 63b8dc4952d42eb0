from .levels import LogLevel
from .logger import get_logger

__all__ = ["LogLevel", "get_logger"]
