"""
Input loading helpers for command handlers.

Tables may be given as a file path or as the name of a shipped fixture
(``z4``, ``s3``, ``n5``, ``l6``, ``b8``).
"""

from pathlib import Path

from loopext.domain.finite_loop import FiniteLoop, LoopFixtureRepository, read_table
from loopext.infrastructure.logging import get_logger

logger = get_logger(__name__)


def load_loop(spec: str, fixtures_dir: Path) -> FiniteLoop:
    """
    Load a loop from a path, falling back to the fixture of that name.

    Raises:
        FormatError: If the file is malformed
        InvalidLoopError: If the table is not a loop with identity 0
        UnknownFixtureError: If ``spec`` is neither a file nor a fixture
    """
    path = Path(spec)
    if path.is_file():
        loop = FiniteLoop(read_table(path))
        logger.debug("Loaded table", path=str(path), order=loop.order)
        return loop
    return LoopFixtureRepository(fixtures_dir).load(spec)
