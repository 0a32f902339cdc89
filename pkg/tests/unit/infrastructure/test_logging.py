"""Unit tests for loopext.infrastructure.logging module."""

import logging
from unittest.mock import MagicMock

import pytest
import structlog

from loopext.infrastructure.logging import (
    WARNINGS_LOGGER,
    WarningsHandler,
    build_processors,
    capture_warnings,
    get_logger,
    parse_log_level,
    run_context,
    setup_logging,
)


@pytest.fixture
def stream(mocker):
    def make(is_tty: bool) -> MagicMock:
        target = mocker.Mock()
        target.isatty.return_value = is_tty
        return target

    return make


@pytest.fixture
def restore_warnings_logger():
    source = logging.getLogger(WARNINGS_LOGGER)
    handlers, propagate = list(source.handlers), source.propagate
    yield source
    logging.captureWarnings(False)
    source.handlers[:] = handlers
    source.propagate = propagate


@pytest.mark.parametrize(
    "value,expected",
    [
        ("10", logging.DEBUG),
        ("INFO", logging.INFO),
        ("warn", logging.WARNING),
        (" Error ", logging.ERROR),
        ("INVALID", logging.WARNING),
        ("", logging.WARNING),
        ("999", 999),
        (-5, logging.WARNING),
        (40, logging.ERROR),
    ],
)
def test_parse_log_level(value, expected):
    assert parse_log_level(value) == expected


@pytest.mark.parametrize("as_json", [True, False])
def test_processors_share_context_and_timestamp(as_json):
    processors = build_processors(as_json=as_json)

    assert processors[0] is structlog.contextvars.merge_contextvars
    timestamper = next(
        p for p in processors if isinstance(p, structlog.processors.TimeStamper)
    )
    assert timestamper.fmt == "iso"
    assert timestamper.utc is True


def test_json_processors_render_sorted_keys():
    processors = build_processors(as_json=True)

    rendered = processors[-1](None, "info", {"seed": 7, "event": "Audit complete"})

    assert rendered == '{"event": "Audit complete", "seed": 7}'
    assert processors[-2] is structlog.processors.dict_tracebacks


def test_console_processors_end_with_console_renderer():
    processors = build_processors(as_json=False)

    assert isinstance(processors[-1], structlog.dev.ConsoleRenderer)
    assert structlog.processors.dict_tracebacks not in processors


@pytest.mark.parametrize(
    "force_json,is_tty,renderer",
    [
        (True, True, structlog.processors.JSONRenderer),
        (True, False, structlog.processors.JSONRenderer),
        (False, True, structlog.dev.ConsoleRenderer),
        (False, False, structlog.processors.JSONRenderer),
    ],
)
def test_setup_logging_picks_renderer_from_stream(
    mocker, stream, force_json, is_tty, renderer
):
    mocker.patch("logging.basicConfig")
    configure = mocker.patch("structlog.configure")

    setup_logging(level=logging.INFO, force_json=force_json, stream=stream(is_tty))

    assert isinstance(configure.call_args.kwargs["processors"][-1], renderer)


def test_setup_logging_applies_level_to_both_layers(mocker, stream):
    basic_config = mocker.patch("logging.basicConfig")
    configure = mocker.patch("structlog.configure")
    make_filtering = mocker.patch(
        "structlog.make_filtering_bound_logger", return_value=MagicMock()
    )
    target = stream(False)

    setup_logging(level=logging.DEBUG, force_json=False, stream=target)

    basic_config.assert_called_once_with(
        format="%(message)s", stream=target, level=logging.DEBUG
    )
    make_filtering.assert_called_once_with(logging.DEBUG)
    assert configure.call_args.kwargs["cache_logger_on_first_use"] is True


def test_setup_logging_defaults_to_stderr(mocker):
    basic_config = mocker.patch("logging.basicConfig")
    mocker.patch("structlog.configure")
    stderr = mocker.patch("sys.stderr")
    stderr.isatty.return_value = False

    setup_logging(level=logging.WARNING, force_json=False)

    assert basic_config.call_args.kwargs["stream"] is stderr


def test_get_logger_delegates_to_structlog(mocker):
    mock_get_logger = mocker.patch("structlog.get_logger")

    get_logger("loopext.test")

    mock_get_logger.assert_called_once_with("loopext.test")


def test_run_context_binds_inside_the_block_only():
    with run_context(command="audit", seed=7):
        assert structlog.contextvars.get_contextvars() == {
            "command": "audit",
            "seed": 7,
        }

    assert structlog.contextvars.get_contextvars() == {}


def test_run_context_leaves_out_missing_seed():
    with run_context(command="inn", seed=None):
        assert structlog.contextvars.get_contextvars() == {"command": "inn"}


def test_warnings_handler_keeps_the_first_line():
    handler = WarningsHandler()
    handler.target = MagicMock()
    message = "smooth.py:41: RuntimeWarning: overflow in matmul\n  J = A @ B\n"
    record = logging.LogRecord(
        WARNINGS_LOGGER, logging.WARNING, __file__, 41, message, (), None
    )

    handler.emit(record)

    handler.target.warning.assert_called_once_with(
        "Python warning", detail="smooth.py:41: RuntimeWarning: overflow in matmul"
    )


def test_capture_warnings_installs_a_single_handler(restore_warnings_logger):
    capture_warnings()
    capture_warnings()

    source = restore_warnings_logger
    assert len(source.handlers) == 1
    assert isinstance(source.handlers[0], WarningsHandler)
    assert source.propagate is False
