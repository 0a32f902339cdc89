"""
Structured logging for loopext.

Events go to stderr through structlog; stdout carries command reports only, so
they stay byte-identical between runs with the same seed. The command-line
driver resolves the level from ``Config`` and ``--log-level``, calls
``setup_logging`` once, and wraps each command in ``run_context``.
"""

import logging
import sys
from contextlib import AbstractContextManager
from typing import Any, TextIO

import structlog
from structlog.typing import FilteringBoundLogger, Processor

# Source of records produced by logging.captureWarnings.
WARNINGS_LOGGER = "py.warnings"
# Re-emitted warnings get their own name; reusing the source would loop.
WARNINGS_TARGET = "loopext.warnings"


def parse_log_level(value: str | int) -> int:
    """
    Level number for a level name or a number.

    Names are case-insensitive; unknown names and negative numbers give WARNING.

    Examples:
        >>> parse_log_level("debug")
        10
        >>> parse_log_level("30")
        30
        >>> parse_log_level("loud")
        30
    """
    if isinstance(value, str):
        name = value.strip().upper()
        if name.isdigit():
            value = int(name)
        else:
            value = logging.getLevelNamesMapping().get(name, logging.WARNING)
    if not isinstance(value, int) or value < logging.NOTSET:
        return logging.WARNING
    return value


def build_processors(*, as_json: bool) -> list[Processor]:
    """Processor chain ending in a sorted-key JSON renderer or a colored console."""
    processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso", utc=True),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.CallsiteParameterAdder(
            {
                structlog.processors.CallsiteParameter.FILENAME,
                structlog.processors.CallsiteParameter.FUNC_NAME,
                structlog.processors.CallsiteParameter.LINENO,
            }
        ),
    ]
    if as_json:
        processors.append(structlog.processors.dict_tracebacks)
        processors.append(structlog.processors.JSONRenderer(sort_keys=True))
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=True))
    return processors


def setup_logging(
    *, level: int, force_json: bool, stream: TextIO | None = None
) -> None:
    """
    Configure structlog and the standard library root logger.

    Args:
        level: Minimum level of emitted events.
        force_json: JSON lines even when ``stream`` is a terminal.
        stream: Destination of log events, stderr if None.
    """
    stream = sys.stderr if stream is None else stream
    logging.basicConfig(format="%(message)s", stream=stream, level=level)
    structlog.configure(
        processors=build_processors(as_json=force_json or not stream.isatty()),
        wrapper_class=structlog.make_filtering_bound_logger(level),
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def get_logger(name: str | None = None) -> FilteringBoundLogger:
    return structlog.get_logger(name)


def run_context(**values: Any) -> AbstractContextManager[None]:
    """
    Bind ``values`` to every event logged inside the ``with`` block.

    None values are left out, so commands without a seed log no seed key.
    """
    bound = {key: value for key, value in values.items() if value is not None}
    return structlog.contextvars.bound_contextvars(**bound)


class WarningsHandler(logging.Handler):
    """Re-emits captured Python warnings (numpy overflow, for one) as events."""

    def __init__(self) -> None:
        super().__init__(level=logging.WARNING)
        self.target = structlog.get_logger(WARNINGS_TARGET)

    def emit(self, record: logging.LogRecord) -> None:
        # first line is "path:lineno: Category: message"; the rest is source
        detail = record.getMessage().strip().partition("\n")[0]
        self.target.warning("Python warning", detail=detail)


def capture_warnings() -> None:
    """Send ``warnings.warn`` output through structlog instead of bare stderr."""
    logging.captureWarnings(True)
    source = logging.getLogger(WARNINGS_LOGGER)
    source.handlers[:] = [WarningsHandler()]
    source.setLevel(logging.WARNING)
    source.propagate = False
