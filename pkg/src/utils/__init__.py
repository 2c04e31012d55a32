"""Logging and file helpers."""

from src.utils.file_ops import FileOps
from src.utils.logging import log_event, setup_logging

__all__ = ["FileOps", "log_event", "setup_logging"]
