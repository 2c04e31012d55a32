"""Console logging setup and the JSONL event log."""

import json
import logging
import sys
from datetime import datetime
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler
from rich.theme import Theme

from src.config import _load_config_from_yaml

LEVEL_STYLES = Theme(
    {
        "logging.level.debug": "dim blue",
        "logging.level.info": "green",
        "logging.level.warning": "yellow",
        "logging.level.error": "red bold",
        "logging.level.critical": "red bold reverse",
    }
)

# stdout carries JSON reports, so log output goes to stderr
console = Console(theme=LEVEL_STYLES, stderr=True)

LOG_DIR = Path("logs")
PLAIN_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _output_section() -> dict:
    return _load_config_from_yaml().get("output", {}) or {}


def setup_logging(verbose: bool = False, use_colors: bool = True) -> None:
    """Route package logs to stderr: DEBUG with ``verbose``, WARNING otherwise.

    ``output.logging: false`` in config.yaml silences everything; colours need
    both ``output.colors`` and a terminal that supports them.
    """
    output = _output_section()
    if not output.get("logging", True):
        logging.disable(logging.CRITICAL)
        return

    level = logging.DEBUG if verbose else logging.WARNING
    if use_colors and output.get("colors", True) and console.color_system is not None:
        handler: logging.Handler = RichHandler(
            console=console, show_time=True, show_level=True, show_path=verbose, markup=False
        )
        logging.basicConfig(level=level, handlers=[handler], force=True)
    else:
        logging.basicConfig(
            level=level,
            format=PLAIN_FORMAT,
            datefmt="%Y-%m-%d %H:%M:%S",
            stream=sys.stderr,
            force=True,
        )

    for noisy in ("langgraph", "pydantic"):
        logging.getLogger(noisy).setLevel(logging.WARNING)


def log_event(kind: str, payload: dict, log_dir: Path | None = None) -> Path:
    """Append an event record to the daily JSONL event log.

    Args:
        kind: Event kind, e.g. "contradiction" or "scan"
        payload: JSON-serializable event body
        log_dir: Directory for the log file (defaults to ./logs)

    Returns:
        Path of the log file written
    """
    target = Path(log_dir) if log_dir is not None else LOG_DIR
    target.mkdir(parents=True, exist_ok=True)

    entry = {
        "timestamp": datetime.now().isoformat(),
        "kind": kind,
        "payload": payload,
    }

    log_file = target / f"events_{datetime.now().strftime('%Y%m%d')}.jsonl"
    with open(log_file, "a") as f:
        f.write(json.dumps(entry, sort_keys=True, default=str) + "\n")
    return log_file
