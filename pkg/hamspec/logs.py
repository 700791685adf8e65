# hamspec/logs.py

"""
Logging setup: one `hamspec` logger tree rendered by rich on stderr,
so JSON/CSV written to stdout stays machine-readable.
"""

from __future__ import annotations

import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from .config import get_settings

_ROOT = "hamspec"
_configured = False


def configure_logging(level: Optional[str] = None) -> None:
    """Attach the rich handler once; later calls only adjust the level."""
    global _configured
    root = logging.getLogger(_ROOT)
    root.setLevel((level or get_settings().log_level).upper())
    if _configured:
        return
    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        rich_tracebacks=True,
    )
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root.addHandler(handler)
    root.propagate = False
    _configured = True


def get_logger(name: str) -> logging.Logger:
    if not _configured:
        configure_logging()
    return logging.getLogger(f"{_ROOT}.{name}")
