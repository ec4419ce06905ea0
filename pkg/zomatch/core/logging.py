"""Logging setup routed through rich."""

import logging

from rich.console import Console
from rich.logging import RichHandler

_HANDLER_NAME = "zomatch-rich"


def configure_logging(level: str = "WARNING", console: Console | None = None) -> None:
    """Install a RichHandler on the package logger once and set its level."""
    logger = logging.getLogger("zomatch")
    logger.setLevel(level.upper())

    if any(h.get_name() == _HANDLER_NAME for h in logger.handlers):
        return

    handler = RichHandler(
        console=console or Console(stderr=True),
        show_path=False,
        rich_tracebacks=True,
    )
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
    logger.addHandler(handler)
    logger.propagate = False
