"""
Permutation arithmetic and the mapping groups of a finite loop.

Composition convention: ``compose(p, q)`` applies q first, then p, that is
``compose(p, q)(i) == p(q(i))``. Words such as λ_{xy}⁻¹ρ_yλ_x are therefore
written left to right exactly as they read and evaluated rightmost first.
"""

from collections import deque
from collections.abc import Iterable, Sequence

from loopext.domain.finite_loop.models import FiniteLoop
from loopext.domain.mapping_groups.exceptions import (
    ClosureLimitError,
    DegreeMismatchError,
    InnerMapError,
)
from loopext.domain.mapping_groups.models import LabelledPerm, Perm, PermGroup
from loopext.infrastructure.logging import get_logger

logger = get_logger(__name__)

DEFAULT_CLOSURE_CAP = 1_000_000


def _lam(L: FiniteLoop, x: int) -> Perm:
    return Perm(tuple(int(v) for v in L.table[x, :]))


def _rho(L: FiniteLoop, x: int) -> Perm:
    return Perm(tuple(int(v) for v in L.table[:, x]))


def compose(*perms: Perm) -> Perm:
    """Product of ``perms``; the rightmost factor acts first.

    Raises:
        DegreeMismatchError: If the factors have different degrees
    """
    if not perms:
        raise ValueError("compose() needs at least one permutation")
    result = perms[-1].images
    degree = len(result)
    for p in reversed(perms[:-1]):
        if p.degree != degree:
            raise DegreeMismatchError(p.degree, degree)
        images = p.images
        result = tuple(images[i] for i in result)
    return Perm(result)


def invert(p: Perm) -> Perm:
    images = [0] * p.degree
    for i, v in enumerate(p.images):
        images[v] = i
    return Perm(tuple(images))


def closure(
    generators: Sequence[Perm], degree: int, cap: int = DEFAULT_CLOSURE_CAP
) -> tuple[Perm, ...]:
    """
    Breadth-first closure of ``generators`` under composition.

    Returns:
        The group elements sorted by image tuple

    Raises:
        ClosureLimitError: If more than ``cap`` elements are produced
    """
    identity = Perm.identity(degree)
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in generators:
            h = compose(g, s)
            if h not in seen:
                seen.add(h)
                if len(seen) > cap:
                    raise ClosureLimitError(cap)
                queue.append(h)
    return tuple(sorted(seen))


def orbits(group: PermGroup) -> list[tuple[int, ...]]:
    """Orbits of the natural action, each sorted, ordered by smallest point."""
    generators = [g.perm for g in group.generators] or list(group.elements)
    seen: set[int] = set()
    result: list[tuple[int, ...]] = []
    for start in range(group.degree):
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            point = frontier.pop()
            for g in generators:
                image = g(point)
                if image not in orbit:
                    orbit.add(image)
                    frontier.append(image)
        seen |= orbit
        result.append(tuple(sorted(orbit)))
    return result


def translations(L: FiniteLoop) -> list[LabelledPerm]:
    result: list[LabelledPerm] = []
    for x in L.elements:
        result.append(LabelledPerm(f"λ{x}", _lam(L, x)))
        result.append(LabelledPerm(f"ρ{x}", _rho(L, x)))
    return result


def multiplication_group(L: FiniteLoop, cap: int = DEFAULT_CLOSURE_CAP) -> PermGroup:
    """Mlt(L), generated by all left and right translations."""
    generators = _deduplicate(translations(L))
    elements = closure([g.perm for g in generators], L.order, cap)
    logger.debug("Multiplication group closed", order=L.order, size=len(elements))
    return PermGroup(degree=L.order, elements=elements, generators=tuple(generators))


def inner_generators(L: FiniteLoop) -> list[LabelledPerm]:
    """
    The standard inner mappings T(x) = ρ_x⁻¹λ_x, L(x,y) = λ_{yx}⁻¹λ_yλ_x and
    R(x,y) = ρ_{xy}⁻¹ρ_yρ_x, without repeats and without the identity.
    """
    lam = [_lam(L, x) for x in L.elements]
    rho = [_rho(L, x) for x in L.elements]
    candidates: list[LabelledPerm] = []
    for x in L.elements:
        candidates.append(LabelledPerm(f"T({x})", compose(invert(rho[x]), lam[x])))
    for x in L.elements:
        for y in L.elements:
            yx = int(L.table[y, x])
            candidates.append(
                LabelledPerm(f"L({x},{y})", compose(invert(lam[yx]), lam[y], lam[x]))
            )
    for x in L.elements:
        for y in L.elements:
            xy = int(L.table[x, y])
            candidates.append(
                LabelledPerm(f"R({x},{y})", compose(invert(rho[xy]), rho[y], rho[x]))
            )
    return [g for g in _deduplicate(candidates) if not g.perm.is_identity]


def inner_mapping_group(
    L: FiniteLoop,
    cap: int = DEFAULT_CLOSURE_CAP,
    mlt: PermGroup | None = None,
) -> PermGroup:
    """
    Inn(L), the stabilizer of the identity inside Mlt(L).

    The labelled generators T, L, R are attached for display and for building
    homomorphisms; their closure is checked against the stabilizer.
    """
    mlt = mlt if mlt is not None else multiplication_group(L, cap)
    elements = tuple(p for p in mlt.elements if p.fixes(0))
    if len(mlt) != L.order * len(elements):
        raise AssertionError(
            f"|Mlt| = {len(mlt)} is not {L.order}·|Inn| = {L.order * len(elements)}"
        )
    generators = inner_generators(L)
    generated = closure([g.perm for g in generators], L.order, cap)
    if generated != elements:
        raise AssertionError("Standard inner mappings do not generate the stabilizer")
    logger.debug("Inner mapping group closed", order=L.order, size=len(elements))
    return PermGroup(degree=L.order, elements=elements, generators=tuple(generators))


def _checked_inner(label: str, perm: Perm) -> Perm:
    if not perm.fixes(0):
        raise InnerMapError(label, perm(0))
    return perm


def inner_map_P(L: FiniteLoop, xi: int, eta: int) -> Perm:
    """λ_{ξη}⁻¹ ρ_η λ_ξ; fixes the identity."""
    product = int(L.table[xi, eta])
    perm = compose(
        invert(_lam(L, product)),
        _rho(L, eta),
        _lam(L, xi),
    )
    return _checked_inner(f"P({xi},{eta})", perm)


def inner_map_Q(L: FiniteLoop, xi: int, eta: int) -> Perm:
    """λ_{ξη}⁻¹ λ_ξ λ_η; fixes the identity."""
    product = int(L.table[xi, eta])
    perm = compose(
        invert(_lam(L, product)),
        _lam(L, xi),
        _lam(L, eta),
    )
    return _checked_inner(f"Q({xi},{eta})", perm)


def _deduplicate(perms: Iterable[LabelledPerm]) -> list[LabelledPerm]:
    seen: set[Perm] = set()
    result: list[LabelledPerm] = []
    for g in perms:
        if g.perm not in seen:
            seen.add(g.perm)
            result.append(g)
    return result


class TranslationWords:
    """
    The translations λ_x, ρ_x of one loop and their inverses, for spelling
    out words such as λ_{ξη}⁻¹ρ_ηλ_ξ.
    """

    def __init__(self, L: FiniteLoop) -> None:
        self.loop = L
        self._lam = [_lam(L, x) for x in L.elements]
        self._rho = [_rho(L, x) for x in L.elements]
        self._lam_inv = [invert(p) for p in self._lam]
        self._rho_inv = [invert(p) for p in self._rho]

    def lam(self, x: int, inverse: bool = False) -> Perm:
        return self._lam_inv[x] if inverse else self._lam[x]

    def rho(self, x: int, inverse: bool = False) -> Perm:
        return self._rho_inv[x] if inverse else self._rho[x]

    def word(self, *factors: Perm) -> Perm:
        """Product of ``factors`` with the rightmost acting first."""
        return compose(*factors)


def translation_words(L: FiniteLoop) -> TranslationWords:
    return TranslationWords(L)
