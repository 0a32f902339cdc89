import logging
import os
from pathlib import Path
from unittest.mock import patch

import pytest
from pydantic_settings import SettingsConfigDict

from loopext.domain.abelian import AbGroup
from loopext.domain.finite_loop import FiniteLoop, LoopFixtureRepository
from loopext.infrastructure.config import Config, get_config

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"
CORPUS = ("z4", "s3", "n5", "l6", "b8")


@pytest.fixture(autouse=True)
def isolate_env():
    """Ensure complete test isolation from .env files and system environment."""
    with (
        patch.dict(os.environ, {}, clear=True),
        patch.multiple(
            Config,
            model_config=SettingsConfigDict(env_file=None, env_ignore_empty=True),
        ),
    ):
        get_config.cache_clear()
        yield
        get_config.cache_clear()


@pytest.fixture(autouse=True)
def suppress_integration_logging(request, caplog):
    """Keep WARNING and ERROR visible for integration tests, drop INFO."""
    if request.node.get_closest_marker("integration"):
        caplog.set_level(logging.WARNING)
        logging.getLogger("loopext").setLevel(logging.WARNING)


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def repository() -> LoopFixtureRepository:
    return LoopFixtureRepository(FIXTURES_DIR)


@pytest.fixture(scope="session")
def z4(repository) -> FiniteLoop:
    return repository.load("z4")


@pytest.fixture(scope="session")
def s3(repository) -> FiniteLoop:
    return repository.load("s3")


@pytest.fixture(scope="session")
def n5(repository) -> FiniteLoop:
    return repository.load("n5")


@pytest.fixture(scope="session")
def l6(repository) -> FiniteLoop:
    return repository.load("l6")


@pytest.fixture(scope="session")
def b8(repository) -> FiniteLoop:
    return repository.load("b8")


@pytest.fixture(scope="session", params=CORPUS)
def corpus_loop(request, repository) -> FiniteLoop:
    return repository.load(request.param)


@pytest.fixture
def z2() -> AbGroup:
    return AbGroup(modulus=2, rank=1)


@pytest.fixture
def z3() -> AbGroup:
    return AbGroup(modulus=3, rank=1)


@pytest.fixture
def z2_squared() -> AbGroup:
    return AbGroup(modulus=2, rank=2)
