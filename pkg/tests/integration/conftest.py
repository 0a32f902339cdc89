"""
Integration test configuration and fixtures.

Integration tests drive whole commands through ``main`` and read back the
files they write, so they share a runner and a per-test working directory.
"""

import logging
from io import StringIO

import pytest

from loopext.app import main
from loopext.infrastructure.config import Config


@pytest.fixture(autouse=True, scope="function")
def configure_integration_test_logging(caplog):
    """
    Keep integration test output quiet.

    WARNING and ERROR stay visible; run with ``--log-cli-level=DEBUG -s`` to
    see the structured events of a failing pipeline.
    """
    caplog.set_level(logging.WARNING)

    loggers_to_suppress = ["loopext", "py.warnings"]
    original_levels = {}

    for logger_name in loggers_to_suppress:
        logger = logging.getLogger(logger_name)
        original_levels[logger_name] = logger.level
        logger.setLevel(logging.WARNING)

    yield

    for logger_name, original_level in original_levels.items():
        logging.getLogger(logger_name).setLevel(original_level)


@pytest.fixture
def enable_debug_logging(caplog):
    """
    Explicitly enable debug logging for one test.

    Example:
        def test_complex_pipeline(enable_debug_logging, run_cli):
            ...
    """
    caplog.set_level(logging.DEBUG)
    logging.getLogger("loopext").setLevel(logging.DEBUG)


@pytest.fixture
def run_cli():
    """Run ``loopext`` in-process; returns (exit code, stdout, stderr)."""

    def run(*argv: str, config: Config | None = None) -> tuple[int, str, str]:
        out, err = StringIO(), StringIO()
        code = main(list(argv), config=config or Config(), out=out, err=err)
        return code, out.getvalue(), err.getvalue()

    return run
