"""Unit test configuration and fixtures."""

import logging

import pytest
import structlog


@pytest.fixture(autouse=True)
def suppress_unit_test_logging(caplog):
    """
    Keep unit test logs at WARNING and undo the structlog configuration and
    warning capture a test installs (the CLI driver sets both process-wide).

    Tests that need to verify logging behavior should use mocker.patch() directly.
    """
    caplog.set_level(logging.WARNING)
    yield
    structlog.reset_defaults()
    logging.captureWarnings(False)
