import itertools

import numpy as np
import pytest

from loopext.domain.abelian import AbGroup, AutoMatrix
from loopext.domain.extensions import (
    Cocycle,
    ExtElement,
    ExtensionSizeError,
    TQuasigroupParams,
    UnsupportedKernelError,
    build_extension,
    ext_ldiv,
    ext_left_inverse,
    ext_mul,
    ext_rdiv,
    ext_right_inverse,
    extension_element,
    extension_index,
    identity_cocycle,
    opposite_cocycle,
    random_cocycle,
    random_phi,
    t_quasigroup,
    tangent_like_cocycle,
    trivial_phi,
    validate_cocycle,
)
from loopext.domain.finite_loop import (
    find_identity,
    is_associative,
    opposite,
    validate_quasigroup,
)
from loopext.domain.mapping_groups import inner_mapping_group

Z5 = AbGroup(modulus=5, rank=1)
T_QUASIGROUP_CASES = [
    (phi, psi, c)
    for phi, psi in itertools.product(range(1, 5), repeat=2)
    for c in range(5)
]


@pytest.fixture(scope="module")
def n5_cocycle(n5) -> Cocycle:
    return random_cocycle(n5, AbGroup(modulus=3, rank=1), seed=7)


@pytest.mark.parametrize(("phi", "psi", "c"), T_QUASIGROUP_CASES)
def test_t_quasigroup_over_z5(phi, psi, c):
    params = TQuasigroupParams(
        group=Z5,
        phi=AutoMatrix(Z5, ((phi,),)),
        psi=AutoMatrix(Z5, ((psi,),)),
        c=Z5.vector([c]),
    )
    q = t_quasigroup(params)
    rows = np.arange(5)[:, None]
    cols = np.arange(5)[None, :]

    assert validate_quasigroup(q.table).is_latin
    assert q.table[1, 2] == (phi + 2 * psi + c) % 5
    # a·(a\b) = b and (b/a)·a = b
    assert np.array_equal(q.table[rows, q.ldiv_table], np.broadcast_to(cols, (5, 5)))
    assert np.array_equal(q.table[q.rdiv_table, cols], np.broadcast_to(rows, (5, 5)))
    expected_identity = (-c) % 5 if phi == psi == 1 else None
    assert find_identity(q.table) == expected_identity


def test_t_quasigroup_needs_finite_kernel():
    group = AbGroup(modulus=0, rank=1)
    eye = group.identity_matrix()
    params = TQuasigroupParams(group=group, phi=eye, psi=eye, c=group.zero)

    with pytest.raises(UnsupportedKernelError):
        t_quasigroup(params)


def test_identity_cocycle_gives_direct_product(z4, z2):
    extension = build_extension(identity_cocycle(z4, z2))

    assert extension.order == 8
    assert is_associative(extension)


def test_random_cocycle_is_normalized_and_seeded(n5):
    kernel = AbGroup(modulus=4, rank=2)
    cocycle = random_cocycle(n5, kernel, seed=3)

    assert validate_cocycle(cocycle).valid
    assert cocycle == random_cocycle(n5, kernel, seed=3)
    assert cocycle != random_cocycle(n5, kernel, seed=4)


def test_validate_cocycle_names_cells(z4):
    kernel = AbGroup(modulus=4, rank=1)
    P = np.ones((4, 4, 1, 1), dtype=np.int64)
    P[1, 0] = 2
    Q = np.ones((4, 4, 1, 1), dtype=np.int64)
    Q[2, 3] = 0

    report = validate_cocycle(Cocycle(base=z4, kernel=kernel, P=P, Q=Q))

    assert not report.valid
    assert report.problems == (
        "P[1][0] is not the identity",
        "P[1][0] is not an automorphism",
        "Q[2][3] is not an automorphism",
    )


def test_ext_mul_matches_materialized_table(n5_cocycle):
    table = build_extension(n5_cocycle).table
    size = table.shape[0]

    for i in range(size):
        for j in range(size):
            a = extension_element(n5_cocycle, i)
            b = extension_element(n5_cocycle, j)
            assert extension_index(n5_cocycle, ext_mul(n5_cocycle, a, b)) == table[i, j]


def test_extension_divisions_and_inverses(n5_cocycle):
    size = n5_cocycle.base.order * n5_cocycle.kernel.order
    identity = ExtElement(0, n5_cocycle.kernel.zero)

    for i in range(size):
        a = extension_element(n5_cocycle, i)
        assert ext_mul(n5_cocycle, ext_left_inverse(n5_cocycle, a), a) == identity
        assert ext_mul(n5_cocycle, a, ext_right_inverse(n5_cocycle, a)) == identity
        for j in range(size):
            b = extension_element(n5_cocycle, j)
            assert ext_mul(n5_cocycle, a, ext_ldiv(n5_cocycle, a, b)) == b
            assert ext_mul(n5_cocycle, ext_rdiv(n5_cocycle, b, a), a) == b


def test_extension_index_is_base_major(n5_cocycle):
    element = ExtElement(2, n5_cocycle.kernel.vector([1]))

    assert extension_index(n5_cocycle, element) == 7
    assert str(element) == "(2,(1))"


def test_opposite_cocycle_builds_opposite_extension(n5_cocycle):
    assert build_extension(opposite_cocycle(n5_cocycle)) == opposite(
        build_extension(n5_cocycle)
    )


def test_build_extension_cap(n5_cocycle):
    with pytest.raises(ExtensionSizeError) as exc_info:
        build_extension(n5_cocycle, cap=10)

    assert (exc_info.value.order, exc_info.value.cap) == (15, 10)


def test_build_extension_needs_finite_kernel(z4):
    with pytest.raises(UnsupportedKernelError):
        build_extension(identity_cocycle(z4, AbGroup(modulus=0, rank=1)))


def test_tangent_like_cocycle_of_trivial_phi_is_identity(n5):
    kernel = AbGroup(modulus=3, rank=2)
    phi = trivial_phi(inner_mapping_group(n5), kernel)

    assert tangent_like_cocycle(n5, phi) == identity_cocycle(n5, kernel)


def test_tangent_like_cocycle_is_normalized(n5):
    kernel = AbGroup(modulus=3, rank=2)
    phi = random_phi(inner_mapping_group(n5), kernel, seed=5)

    assert validate_cocycle(tangent_like_cocycle(n5, phi)).valid


def test_tangent_like_q_is_trivial_over_groups(s3):
    kernel = AbGroup(modulus=5, rank=2)
    phi = random_phi(inner_mapping_group(s3), kernel, seed=1)
    cocycle = tangent_like_cocycle(s3, phi)

    assert np.array_equal(cocycle.Q, identity_cocycle(s3, kernel).Q)
