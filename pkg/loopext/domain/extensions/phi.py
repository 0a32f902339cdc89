"""
Homomorphisms Φ: Inn(L) → Aut(A).

A Φ is given on a generating set and extended along the Cayley graph of the
domain: every edge g → g∘s must satisfy Φ(g∘s) = Φ(g)Φ(s). Two words reaching
the same permutation with different matrices make the assignment inconsistent.
"""

from collections import deque
from collections.abc import Sequence

import numpy as np
from sympy.combinatorics import Permutation

from loopext.domain.abelian import batch
from loopext.domain.abelian.exceptions import NotAutomorphismError
from loopext.domain.abelian.models import (
    AbGroup,
    AutoMatrix,
    IntArray,
    integer_determinant,
)
from loopext.domain.abelian.service import SeedLike, random_involution, rng_from
from loopext.domain.extensions.exceptions import (
    PermutationRepresentationError,
    PhiConflictError,
    PhiCoverageError,
    PhiDomainError,
)
from loopext.domain.extensions.models import PhiHom
from loopext.domain.mapping_groups.models import Perm, PermGroup
from loopext.domain.mapping_groups.service import compose, orbits
from loopext.infrastructure.logging import get_logger

logger = get_logger(__name__)

DEFAULT_EXHAUSTIVE_LIMIT = 128

Assignment = tuple[Perm, AutoMatrix | IntArray]


def _as_matrix(value: AutoMatrix | IntArray, kernel: AbGroup) -> IntArray:
    array = value.array if isinstance(value, AutoMatrix) else kernel.reduce(value)
    if array.shape != (kernel.rank, kernel.rank):
        raise NotAutomorphismError(array.tolist(), 0, kernel.spec)
    if not batch.is_invertible(array, kernel):
        raise NotAutomorphismError(
            array.tolist(), integer_determinant(array), kernel.spec
        )
    array = np.array(array, dtype=np.int64, copy=True)
    array.flags.writeable = False
    return array


def phi_from_generators(
    inn: PermGroup,
    kernel: AbGroup,
    assignments: Sequence[Assignment],
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> PhiHom:
    """
    Extend ``assignments`` multiplicatively to all of ``inn``.

    Raises:
        NotAutomorphismError: If an assigned matrix is not invertible
        PhiDomainError: If an assigned permutation is not in ``inn``
        PhiConflictError: If two words give different matrices for one permutation
        PhiCoverageError: If the assigned permutations do not generate ``inn``
    """
    edges: list[tuple[Perm, IntArray]] = []
    for perm, value in assignments:
        if perm not in inn:
            raise PhiDomainError(perm)
        edges.append((perm, _as_matrix(value, kernel)))

    identity = Perm.identity(inn.degree)
    eye = np.eye(kernel.rank, dtype=np.int64)
    eye.flags.writeable = False
    images: dict[Perm, IntArray] = {identity: eye}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s, matrix in edges:
            h = compose(g, s)
            value = kernel.reduce(images[g] @ matrix)
            existing = images.get(h)
            if existing is None:
                value.flags.writeable = False
                images[h] = value
                queue.append(h)
            elif not np.array_equal(existing, value):
                raise PhiConflictError(h, existing.tolist(), value.tolist())

    if len(images) != inn.order:
        raise PhiCoverageError(len(images), inn.order)

    phi = PhiHom(
        domain=inn,
        kernel=kernel,
        images={perm: images[perm] for perm in inn.elements},
    )
    if inn.order <= exhaustive_limit:
        conflict = verify_homomorphism(phi)
        if conflict is not None:
            p, q = conflict
            product = compose(p, q)
            raise PhiConflictError(
                product,
                phi.matrix(product).tolist(),
                kernel.reduce(phi.matrix(p) @ phi.matrix(q)).tolist(),
            )
    logger.debug("Homomorphism extended", domain=inn.order, kernel=kernel.spec)
    return phi


def verify_homomorphism(phi: PhiHom) -> tuple[Perm, Perm] | None:
    """Lexicographically first pair (p, q) with Φ(p∘q) ≠ Φ(p)Φ(q), if any."""
    elements = phi.domain.elements
    N = len(elements)
    stack = np.stack([phi.matrix(p) for p in elements])
    products = np.empty((N, N), dtype=np.int64)
    for i, p in enumerate(elements):
        for j, q in enumerate(elements):
            products[i, j] = phi.domain.index_of(compose(p, q))
    lhs = stack[products]
    rhs = batch.matmul(stack[:, None], stack[None, :], modulus=phi.kernel.modulus)
    bad = np.argwhere(np.any(lhs != rhs, axis=(2, 3)))
    if bad.size == 0:
        return None
    i, j = (int(v) for v in bad[0])
    return elements[i], elements[j]


def trivial_phi(inn: PermGroup, kernel: AbGroup) -> PhiHom:
    return phi_from_generators(
        inn, kernel, [(g.perm, kernel.identity_matrix()) for g in inn.generators]
    )


def restricted_parity(perm: Perm, orbit: Sequence[int]) -> int:
    """Parity (0 or 1) of ``perm`` restricted to an invariant ``orbit``."""
    position = {point: index for index, point in enumerate(orbit)}
    restricted = Permutation([position[perm(point)] for point in orbit])
    return restricted.parity()


def orbit_sign_phi(
    inn: PermGroup,
    kernel: AbGroup,
    orbit: Sequence[int],
    involution: AutoMatrix,
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> PhiHom:
    """Φ(p) = M^{parity of p on ``orbit``} for an involution M."""
    eye = kernel.identity_matrix()
    assignments = [
        (g.perm, involution if restricted_parity(g.perm, orbit) else eye)
        for g in inn.generators
    ]
    return phi_from_generators(inn, kernel, assignments, exhaustive_limit)


def permutation_matrix(perm: Perm) -> IntArray:
    """M with M[p(i), i] = 1, so M·e_i = e_{p(i)}."""
    n = perm.degree
    matrix = np.zeros((n, n), dtype=np.int64)
    matrix[list(perm.images), list(range(n))] = 1
    return matrix


def permutation_phi(
    inn: PermGroup, kernel: AbGroup, exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT
) -> PhiHom:
    """
    Inn(L) acting on (ℤ_m)^n by permuting coordinates.

    Raises:
        PermutationRepresentationError: If the kernel rank differs from the degree
    """
    if kernel.rank != inn.degree:
        raise PermutationRepresentationError(inn.degree, kernel.rank)
    assignments = [(g.perm, permutation_matrix(g.perm)) for g in inn.generators]
    return phi_from_generators(inn, kernel, assignments, exhaustive_limit)


def random_phi(
    inn: PermGroup,
    kernel: AbGroup,
    seed: SeedLike = None,
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> PhiHom:
    """
    An orbit-sign Φ on a randomly chosen non-trivial orbit with a random
    involution; trivial when every orbit is a fixed point.
    """
    rng = rng_from(seed)
    candidates = [orbit for orbit in orbits(inn) if len(orbit) > 1]
    if not candidates:
        return trivial_phi(inn, kernel)
    orbit = candidates[int(rng.integers(len(candidates)))]
    involution = random_involution(kernel, rng)
    return orbit_sign_phi(inn, kernel, orbit, involution, exhaustive_limit)
