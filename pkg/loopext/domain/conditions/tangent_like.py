"""
Identities on Φ for tangent-like extensions.

For P, Q induced by Φ: Inn(L) → Aut(A) each cocycle identity becomes an
identity between sums of Φ-images of translation words. Every word below
fixes the identity of L when L has the property in question; the sums are
added entrywise mod m.
"""

from collections.abc import Callable, Iterator

import numpy as np

from loopext.domain.abelian.models import IntArray
from loopext.domain.conditions.exceptions import WordNotInnerError
from loopext.domain.conditions.models import (
    ConditionResult,
    ConditionStatus,
    PropertyKind,
)
from loopext.domain.conditions.properties import has_property
from loopext.domain.extensions.models import PhiHom
from loopext.domain.finite_loop.models import FiniteLoop
from loopext.domain.finite_loop.service import inverse_table
from loopext.domain.mapping_groups.models import Perm
from loopext.domain.mapping_groups.service import TranslationWords

Words = tuple[list[Perm], list[Perm]]


def _two_sided_inverse(w: TranslationWords, inv: np.ndarray, xi: int) -> Words:
    i = int(inv[xi])
    lam, rho = w.lam, w.rho
    return (
        [w.word(rho(i), lam(xi))],
        [w.word(lam(xi), rho(xi, True), lam(i), lam(xi))],
    )


def _left_inverse(w: TranslationWords, inv: np.ndarray, xi: int, eta: int) -> Words:
    T = w.loop.table
    xe = int(T[xi, eta])
    lam, rho = w.lam, w.rho
    return (
        [w.word(lam(eta, True), rho(xe), lam(xi, True))],
        [
            w.word(
                lam(eta, True), lam(xi, True), rho(eta), lam(xi), rho(xi), lam(xi, True)
            )
        ],
    )


def _right_inverse(w: TranslationWords, inv: np.ndarray, xi: int, eta: int) -> Words:
    T = w.loop.table
    j = int(inv[eta])
    xe = int(T[xi, eta])
    lam, rho = w.lam, w.rho
    return (
        [w.word(lam(xi, True), lam(xe), lam(j))],
        [w.word(lam(xi, True), rho(eta, True), lam(xi), rho(eta), lam(eta), lam(j))],
    )


def _monoassociative(w: TranslationWords, inv: np.ndarray, xi: int) -> Words:
    T = w.loop.table
    s = int(T[xi, xi])
    c1, c2 = int(T[xi, s]), int(T[s, xi])
    lam, rho = w.lam, w.rho
    return (
        [
            w.word(lam(c1, True), rho(s), lam(xi)),
            w.word(lam(c1, True), lam(xi), rho(xi), lam(xi)),
            w.word(lam(c1, True), lam(xi), lam(xi), lam(xi)),
        ],
        [
            w.word(lam(c2, True), rho(xi), rho(xi), lam(xi)),
            w.word(lam(c2, True), rho(xi), lam(xi), lam(xi)),
            w.word(lam(c2, True), lam(s), lam(xi)),
        ],
    )


def _left_alternative(w: TranslationWords, inv: np.ndarray, xi: int, eta: int) -> Words:
    T = w.loop.table
    s = int(T[xi, xi])
    xe = int(T[xi, eta])
    a, b = int(T[xi, xe]), int(T[s, eta])
    lam, rho = w.lam, w.rho
    return (
        [
            w.word(lam(a, True), rho(xe), lam(xi)),
            w.word(lam(a, True), lam(xi), rho(eta), lam(xi)),
        ],
        [
            w.word(lam(b, True), rho(eta), rho(xi), lam(xi)),
            w.word(lam(b, True), rho(eta), lam(xi), lam(xi)),
        ],
    )


def _right_alternative(
    w: TranslationWords, inv: np.ndarray, xi: int, eta: int
) -> Words:
    T = w.loop.table
    s = int(T[xi, xi])
    ex = int(T[eta, xi])
    a, b = int(T[ex, xi]), int(T[eta, s])
    lam, rho = w.lam, w.rho
    return (
        [
            w.word(lam(a, True), rho(xi), lam(eta), lam(xi)),
            w.word(lam(a, True), lam(ex), lam(xi)),
        ],
        [
            w.word(lam(b, True), lam(eta), rho(xi), lam(xi)),
            w.word(lam(b, True), lam(eta), lam(xi), lam(xi)),
        ],
    )


def _flexible(w: TranslationWords, inv: np.ndarray, xi: int, eta: int) -> Words:
    T = w.loop.table
    xe, ex = int(T[xi, eta]), int(T[eta, xi])
    a, b = int(T[xi, ex]), int(T[xe, xi])
    lam, rho = w.lam, w.rho
    return (
        [
            w.word(lam(a, True), rho(ex), lam(xi)),
            w.word(lam(a, True), lam(xi), lam(eta), lam(xi)),
        ],
        [
            w.word(lam(b, True), rho(xi), rho(eta), lam(xi)),
            w.word(lam(b, True), lam(xe), lam(xi)),
        ],
    )


def _left_bol(
    w: TranslationWords, inv: np.ndarray, xi: int, eta: int, zeta: int
) -> Words:
    T = w.loop.table
    inner = int(T[eta, T[xi, zeta]])
    a = int(T[xi, inner])
    ex = int(T[eta, xi])
    b = int(T[T[xi, ex], zeta])
    lam, rho = w.lam, w.rho
    return (
        [
            w.word(lam(a, True), rho(inner), lam(xi)),
            w.word(lam(a, True), lam(xi), lam(eta), rho(zeta), lam(xi)),
        ],
        [
            w.word(lam(b, True), rho(zeta), rho(ex), lam(xi)),
            w.word(lam(b, True), rho(zeta), lam(xi), lam(eta), lam(xi)),
        ],
    )


def _right_bol(
    w: TranslationWords, inv: np.ndarray, xi: int, eta: int, zeta: int
) -> Words:
    T = w.loop.table
    xe = int(T[xi, eta])
    a = int(T[zeta, T[xe, xi]])
    d = int(T[T[zeta, xi], eta])
    b = int(T[d, xi])
    lam, rho = w.lam, w.rho
    return (
        [
            w.word(lam(a, True), lam(zeta), rho(xi), rho(eta), lam(xi)),
            w.word(lam(a, True), lam(zeta), lam(xe), lam(xi)),
        ],
        [
            w.word(lam(b, True), rho(xi), rho(eta), lam(zeta), lam(xi)),
            w.word(lam(b, True), lam(d), lam(xi)),
        ],
    )


WORDS: dict[PropertyKind, Callable[..., Words]] = {
    PropertyKind.TWO_SIDED_INVERSE: _two_sided_inverse,
    PropertyKind.LEFT_INVERSE: _left_inverse,
    PropertyKind.RIGHT_INVERSE: _right_inverse,
    PropertyKind.MONOASSOCIATIVE: _monoassociative,
    PropertyKind.LEFT_ALTERNATIVE: _left_alternative,
    PropertyKind.RIGHT_ALTERNATIVE: _right_alternative,
    PropertyKind.FLEXIBLE: _flexible,
    PropertyKind.LEFT_BOL: _left_bol,
    PropertyKind.RIGHT_BOL: _right_bol,
}


def _tuples(n: int, arity: int) -> Iterator[tuple[int, ...]]:
    grid = np.indices((n,) * arity).reshape(arity, -1).T
    for row in grid:
        yield tuple(int(v) for v in row)


def _phi_sum(phi: PhiHom, words: list[Perm], label: str) -> IntArray:
    total = np.zeros((phi.kernel.rank, phi.kernel.rank), dtype=np.int64)
    for perm in words:
        if not perm.fixes(0):
            raise WordNotInnerError(label, perm)
        total = total + phi.matrix(perm, label)
    return phi.kernel.reduce(total)


def check_tangent_like_condition(
    L: FiniteLoop, phi: PhiHom, kind: PropertyKind
) -> ConditionResult:
    """
    Evaluate the Φ-identity of ``kind`` on every tuple.

    Returns NOT_APPLICABLE when L lacks ``kind``; the identities are only
    equivalent to the cocycle conditions under that hypothesis.

    Raises:
        WordNotInnerError: If a word moves the identity
        PhiDomainError: If a word is outside the domain of Φ
    """
    base = has_property(L, kind)
    if not base.holds:
        return ConditionResult(
            kind,
            ConditionStatus.NOT_APPLICABLE,
            witness=base.witness,
            detail=f"loop is not {kind.value}",
        )
    inv = inverse_table(L) if kind.needs_inverses else np.arange(L.order)
    words = TranslationWords(L)
    build = WORDS[kind]
    for point in _tuples(L.order, kind.arity):
        lhs, rhs = build(words, inv, *point)
        label = f"({kind.letter}i) at {point}"
        if not np.array_equal(_phi_sum(phi, lhs, label), _phi_sum(phi, rhs, label)):
            return ConditionResult(
                kind,
                ConditionStatus.FAILS,
                witness=point,
                components=(f"{kind.letter}i",),
                detail=f"Φ-identity {kind.letter}i fails",
            )
    return ConditionResult(kind, ConditionStatus.HOLDS)
