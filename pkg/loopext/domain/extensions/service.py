"""
Linear abelian extensions of finite loops.

F(P, Q) is the set L×A with

    (ξ, x)·(η, y) = (ξη, P(ξ, η)x + Q(ξ, η)y),

a loop with identity (e, 0) whenever P(ξ, e) = I = Q(e, η). Tangent-like
cocycles take P and Q from a homomorphism Φ: Inn(L) → Aut(A) applied to the
inner mappings λ_{ξη}⁻¹ρ_ηλ_ξ and λ_{ξη}⁻¹λ_ξλ_η.
"""

import numpy as np

from loopext.domain.abelian import batch
from loopext.domain.abelian.models import AbGroup, IntArray
from loopext.domain.abelian.service import (
    SeedLike,
    random_matrix_array,
    rng_from,
)
from loopext.domain.extensions.exceptions import (
    ExtensionSizeError,
    UnsupportedKernelError,
)
from loopext.domain.extensions.models import (
    Cocycle,
    CocycleReport,
    ExtElement,
    PhiHom,
    TQuasigroup,
    TQuasigroupParams,
)
from loopext.domain.finite_loop.models import FiniteLoop, as_cayley_table
from loopext.domain.finite_loop.service import opposite
from loopext.domain.mapping_groups.service import inner_map_P, inner_map_Q
from loopext.infrastructure.logging import get_logger

logger = get_logger(__name__)

DEFAULT_EXTENSION_CAP = 10_000


def _ranks(group: AbGroup, vectors: IntArray) -> IntArray:
    return group.reduce(vectors) @ group.rank_weights


def t_quasigroup(params: TQuasigroupParams) -> TQuasigroup:
    """
    The table of x·y = φx + ψy + c over a finite kernel.

    Divisions come from x\\y = ψ⁻¹(y − φx − c) and y/x = φ⁻¹(y − ψx − c);
    the result carries both so callers can compare them with the table.

    Raises:
        UnsupportedKernelError: If the kernel is ℤ^k
    """
    group = params.group
    if not group.is_finite:
        raise UnsupportedKernelError(group.spec, "Tabulating a T-quasigroup")
    m = group.modulus
    F = group.element_array
    phi, psi, c = params.phi.array, params.psi.array, params.c.array
    phi_inv = batch.inverse(phi, group)
    psi_inv = batch.inverse(psi, group)

    phi_x = F @ phi.T
    psi_y = F @ psi.T
    table = _ranks(group, phi_x[:, None, :] + psi_y[None, :, :] + c)

    # ldiv[a, b] = a\b and rdiv[b, a] = b/a
    ldiv = _ranks(group, ((F[None, :, :] - phi_x[:, None, :] - c) % m) @ psi_inv.T)
    rdiv = _ranks(group, ((F[:, None, :] - psi_y[None, :, :] - c) % m) @ phi_inv.T)
    return TQuasigroup(
        params=params,
        table=as_cayley_table(table),
        ldiv_table=as_cayley_table(ldiv),
        rdiv_table=as_cayley_table(rdiv),
    )


def identity_cocycle(L: FiniteLoop, kernel: AbGroup) -> Cocycle:
    """P ≡ Q ≡ I; F(P, Q) is the direct product L×A."""
    eye = batch.identity_stack((L.order, L.order), kernel.rank)
    return Cocycle(base=L, kernel=kernel, P=eye, Q=eye)


def random_cocycle(L: FiniteLoop, kernel: AbGroup, seed: SeedLike = None) -> Cocycle:
    """
    Entrywise random automorphisms, then normalized.

    All P entries are drawn row-major before any Q entry, so a seed fixes the
    whole pair. Afterwards P(ξ, e) and Q(e, η) are reset to the identity.
    """
    rng = rng_from(seed)
    n, k = L.order, kernel.rank
    tables = []
    for _ in ("P", "Q"):
        entries = [random_matrix_array(kernel, rng) for _ in range(n * n)]
        tables.append(np.stack(entries).reshape(n, n, k, k))
    P, Q = tables
    eye = np.eye(k, dtype=np.int64)
    P[:, 0] = eye
    Q[0, :] = eye
    return Cocycle(base=L, kernel=kernel, P=P, Q=Q)


def opposite_cocycle(cocycle: Cocycle) -> Cocycle:
    """P*(ξ, η) = Q(η, ξ), Q*(ξ, η) = P(η, ξ); F(P*, Q*) is the opposite of F(P, Q)."""
    return Cocycle(
        base=opposite(cocycle.base),
        kernel=cocycle.kernel,
        P=cocycle.Q.transpose(1, 0, 2, 3),
        Q=cocycle.P.transpose(1, 0, 2, 3),
    )


def validate_cocycle(cocycle: Cocycle) -> CocycleReport:
    """Report normalization failures and non-invertible entries, naming cells."""
    kernel = cocycle.kernel
    eye = np.eye(kernel.rank, dtype=np.int64)
    problems: list[str] = []
    for xi in np.flatnonzero(np.any(cocycle.P[:, 0] != eye, axis=(1, 2))):
        problems.append(f"P[{int(xi)}][0] is not the identity")
    for eta in np.flatnonzero(np.any(cocycle.Q[0, :] != eye, axis=(1, 2))):
        problems.append(f"Q[0][{int(eta)}] is not the identity")
    for name, table in (("P", cocycle.P), ("Q", cocycle.Q)):
        singular = np.argwhere(~batch.is_invertible(table, kernel))
        for xi, eta in singular:
            problems.append(f"{name}[{int(xi)}][{int(eta)}] is not an automorphism")
    return CocycleReport(problems=tuple(problems))


def ext_mul(cocycle: Cocycle, a: ExtElement, b: ExtElement) -> ExtElement:
    """(ξ, x)·(η, y) = (ξη, P(ξ, η)x + Q(ξ, η)y)."""
    xi, eta = a.base, b.base
    fiber = cocycle.P[xi, eta] @ a.fiber.array + cocycle.Q[xi, eta] @ b.fiber.array
    return ExtElement(int(cocycle.base.table[xi, eta]), cocycle.kernel.vector(fiber))


def ext_ldiv(cocycle: Cocycle, a: ExtElement, b: ExtElement) -> ExtElement:
    """(ξ, x)\\(η, y) = (ξ\\η, Q(ξ, ξ\\η)⁻¹(y − P(ξ, ξ\\η)x))."""
    kernel = cocycle.kernel
    zeta = int(cocycle.base.ldiv_table[a.base, b.base])
    q_inv = batch.inverse(cocycle.Q[a.base, zeta], kernel)
    fiber = q_inv @ (b.fiber.array - cocycle.P[a.base, zeta] @ a.fiber.array)
    return ExtElement(zeta, kernel.vector(fiber))


def ext_rdiv(cocycle: Cocycle, b: ExtElement, a: ExtElement) -> ExtElement:
    """(η, y)/(ξ, x) = (η/ξ, P(η/ξ, ξ)⁻¹(y − Q(η/ξ, ξ)x))."""
    kernel = cocycle.kernel
    zeta = int(cocycle.base.rdiv_table[b.base, a.base])
    p_inv = batch.inverse(cocycle.P[zeta, a.base], kernel)
    fiber = p_inv @ (b.fiber.array - cocycle.Q[zeta, a.base] @ a.fiber.array)
    return ExtElement(zeta, kernel.vector(fiber))


def ext_left_inverse(cocycle: Cocycle, a: ExtElement) -> ExtElement:
    """(e, 0)/(ξ, x) = (e/ξ, −P(e/ξ, ξ)⁻¹Q(e/ξ, ξ)x)."""
    kernel = cocycle.kernel
    zeta = int(cocycle.base.rdiv_table[0, a.base])
    p_inv = batch.inverse(cocycle.P[zeta, a.base], kernel)
    fiber = -(p_inv @ cocycle.Q[zeta, a.base] @ a.fiber.array)
    return ExtElement(zeta, kernel.vector(fiber))


def ext_right_inverse(cocycle: Cocycle, a: ExtElement) -> ExtElement:
    """(ξ, x)\\(e, 0) = (ξ\\e, −Q(ξ, ξ\\e)⁻¹P(ξ, ξ\\e)x)."""
    kernel = cocycle.kernel
    zeta = int(cocycle.base.ldiv_table[a.base, 0])
    q_inv = batch.inverse(cocycle.Q[a.base, zeta], kernel)
    fiber = -(q_inv @ cocycle.P[a.base, zeta] @ a.fiber.array)
    return ExtElement(zeta, kernel.vector(fiber))


def extension_index(cocycle: Cocycle, element: ExtElement) -> int:
    """Position of (ξ, x) in a materialized extension: ξ·|A| + rank(x)."""
    return element.base * cocycle.kernel.order + cocycle.kernel.rank_of(element.fiber)


def extension_element(cocycle: Cocycle, index: int) -> ExtElement:
    size = cocycle.kernel.order
    return ExtElement(index // size, cocycle.kernel.vector_at(index % size))


def build_extension(cocycle: Cocycle, cap: int = DEFAULT_EXTENSION_CAP) -> FiniteLoop:
    """
    Materialize F(P, Q) as a Cayley table over base-major pair indices.

    Raises:
        UnsupportedKernelError: If the kernel is ℤ^k
        ExtensionSizeError: If |L|·|A| exceeds ``cap``
    """
    kernel = cocycle.kernel
    if not kernel.is_finite:
        raise UnsupportedKernelError(kernel.spec, "Materializing an extension")
    n, s, m = cocycle.base.order, kernel.order, kernel.modulus
    order = n * s
    if order > cap:
        raise ExtensionSizeError(order, cap)

    F = kernel.element_array
    # PF[ξ, η, a] = P(ξ, η)·F[a]
    PF = np.einsum("xyij,aj->xyai", cocycle.P, F) % m
    QF = np.einsum("xyij,bj->xybi", cocycle.Q, F) % m
    fibers = (PF[:, :, :, None, :] + QF[:, :, None, :, :]) % m
    ranks = fibers @ kernel.rank_weights
    base = cocycle.base.table.astype(np.int64)[:, :, None, None] * s
    table = (base + ranks).transpose(0, 2, 1, 3).reshape(order, order)
    logger.debug(
        "Extension materialized", base_order=n, kernel=kernel.spec, order=order
    )
    return FiniteLoop(table)


def tangent_like_cocycle(L: FiniteLoop, phi: PhiHom) -> Cocycle:
    """
    P(ξ, η) = Φ(λ_{ξη}⁻¹ρ_ηλ_ξ), Q(ξ, η) = Φ(λ_{ξη}⁻¹λ_ξλ_η).

    Raises:
        PhiDomainError: If an inner map falls outside Φ's domain
    """
    n, k = L.order, phi.kernel.rank
    P = np.empty((n, n, k, k), dtype=np.int64)
    Q = np.empty((n, n, k, k), dtype=np.int64)
    for xi in L.elements:
        for eta in L.elements:
            P[xi, eta] = phi.matrix(inner_map_P(L, xi, eta), f"P({xi},{eta})")
            Q[xi, eta] = phi.matrix(inner_map_Q(L, xi, eta), f"Q({xi},{eta})")
    return Cocycle(base=L, kernel=phi.kernel, P=P, Q=Q)

