"""Unit tests for configuration management module."""

import logging
import os
from pathlib import Path
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from loopext.infrastructure.config import BASE_DIR, Config, get_config


def test_config_default_values():
    config = Config()

    assert config.seed == 0
    assert config.samples == 500
    assert config.trials == 100
    assert config.derivative_tolerance == 1e-5
    assert config.algebraic_tolerance == 1e-8
    assert config.finite_difference_step == 1e-4
    assert config.condition_number_limit == 1e12
    assert config.closure_cap == 1_000_000
    assert config.extension_cap == 10_000
    assert config.enumeration_max_order == 8
    assert config.resample_retries == 10
    assert config.phi_exhaustive_limit == 128
    assert config.fixtures_dir == BASE_DIR / "fixtures"
    assert config.log_level == logging.WARNING
    assert config.log_force_json is False


@pytest.mark.parametrize(
    "field_name,invalid_value",
    [
        ("seed", -1),
        ("samples", 0),
        ("trials", 0),
        ("derivative_tolerance", 0),
        ("algebraic_tolerance", -1e-8),
        ("finite_difference_step", 0.5),
        ("condition_number_limit", 1),
        ("extension_cap", 0),
        ("enumeration_max_order", 9),
        ("resample_retries", -1),
    ],
)
def test_config_field_validation_constraints(field_name: str, invalid_value):
    with pytest.raises(ValidationError) as exc_info:
        Config(**{field_name: invalid_value})

    assert field_name in str(exc_info.value)


def test_get_config_cached():
    config1 = get_config()
    config2 = get_config()

    assert config1 is config2
    assert isinstance(config1, Config)


def test_config_reads_from_environment(tmp_path: Path):
    env_vars = {
        "SEED": "7",
        "SAMPLES": "64",
        "TRIALS": "3",
        "ALGEBRAIC_TOLERANCE": "1e-9",
        "FIXTURES_DIR": str(tmp_path),
        "LOG_FORCE_JSON": "true",
    }

    with patch.dict(os.environ, env_vars):
        config = Config()

    assert config.seed == 7
    assert config.samples == 64
    assert config.trials == 3
    assert config.algebraic_tolerance == 1e-9
    assert config.fixtures_dir == tmp_path
    assert config.log_force_json is True


def test_config_validation_with_invalid_env_values():
    with patch.dict(os.environ, {"SAMPLES": "many"}):
        with pytest.raises(ValidationError):
            Config()


@pytest.mark.parametrize(
    "value,expected",
    [
        ("DEBUG", logging.DEBUG),
        ("info", logging.INFO),
        ("40", logging.ERROR),
        ("bogus", logging.WARNING),
    ],
)
def test_config_log_level_accepts_names_and_numbers(value: str, expected: int):
    with patch.dict(os.environ, {"LOG_LEVEL": value}):
        config = Config()

    assert config.log_level == expected
