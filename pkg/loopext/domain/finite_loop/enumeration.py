"""
Backtracking search over normalized Latin squares.

Cells (r, c) with r, c ≥ 1 are filled row-major with the smallest admissible
value first, so hits come out in lexicographic table order. Row 0 and column 0
are fixed to the identity. A filter may supply a partial check that rejects a
half-filled square as soon as some fully determined instance of its identity
fails; this prunes the tree without changing the output.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from loopext.domain.finite_loop.exceptions import EnumerationLimitError
from loopext.domain.finite_loop.models import FiniteLoop
from loopext.infrastructure.logging import get_logger

logger = get_logger(__name__)

MAX_ORDER = 8
UNSET = -1


@dataclass(frozen=True)
class PropertyFilter:
    """A named predicate on loops, optionally able to reject partial squares."""

    name: str
    accepts: Callable[[FiniteLoop], bool]
    rejects_partial: Callable[[np.ndarray], bool] | None = None

    @classmethod
    def everything(cls) -> "PropertyFilter":
        return cls(name="any", accepts=lambda _loop: True)

    @classmethod
    def conjunction(cls, filters: Sequence["PropertyFilter"]) -> "PropertyFilter":
        if not filters:
            return cls.everything()
        if len(filters) == 1:
            return filters[0]
        partials = [f.rejects_partial for f in filters if f.rejects_partial]

        def accepts(loop: FiniteLoop) -> bool:
            return all(f.accepts(loop) for f in filters)

        def rejects_partial(table: np.ndarray) -> bool:
            return any(check(table) for check in partials)

        return cls(
            name=",".join(f.name for f in filters),
            accepts=accepts,
            rejects_partial=rejects_partial if partials else None,
        )


class LoopEnumerator:
    """Deterministic search for normalized loops of a given order."""

    def __init__(self, max_order: int = MAX_ORDER) -> None:
        self._max_order = max_order

    def enumerate(
        self, order: int, predicate: PropertyFilter, limit: int
    ) -> list[FiniteLoop]:
        """
        Return up to ``limit`` loops of ``order`` accepted by ``predicate``.

        Raises:
            EnumerationLimitError: If ``order`` is outside 1..max_order
        """
        if not 1 <= order <= self._max_order:
            raise EnumerationLimitError(order, self._max_order)
        if limit <= 0:
            return []

        n = order
        table = np.full((n, n), UNSET, dtype=np.int32)
        table[0, :] = np.arange(n)
        table[:, 0] = np.arange(n)
        row_used = np.zeros((n, n), dtype=bool)
        column_used = np.zeros((n, n), dtype=bool)
        for i in range(n):
            row_used[i, i] = True
            column_used[i, i] = True
        cells = [(r, c) for r in range(1, n) for c in range(1, n)]
        hits: list[FiniteLoop] = []
        nodes = 0

        def search(position: int) -> bool:
            nonlocal nodes
            if position == len(cells):
                candidate = FiniteLoop(table.copy())
                if predicate.accepts(candidate):
                    hits.append(candidate)
                    logger.debug("Loop search hit", order=n, hit=len(hits))
                return len(hits) >= limit
            r, c = cells[position]
            for value in range(n):
                if row_used[r, value] or column_used[c, value]:
                    continue
                table[r, c] = value
                row_used[r, value] = True
                column_used[c, value] = True
                nodes += 1
                pruned = (
                    predicate.rejects_partial is not None
                    and predicate.rejects_partial(table)
                )
                if not pruned and search(position + 1):
                    return True
                row_used[r, value] = False
                column_used[c, value] = False
                table[r, c] = UNSET
            return False

        search(0)
        logger.info(
            "Loop search finished",
            order=n,
            predicate=predicate.name,
            hits=len(hits),
            nodes=nodes,
        )
        return hits


def enumerate_loops(
    order: int, predicate: PropertyFilter, limit: int, *, max_order: int = MAX_ORDER
) -> list[FiniteLoop]:
    return LoopEnumerator(max_order=max_order).enumerate(order, predicate, limit)
