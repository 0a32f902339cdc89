import numpy as np
import pytest

from loopext.domain.abelian import AbGroup, AutoMatrix
from loopext.domain.conditions import (
    ConditionStatus,
    PropertyKind,
    check_cocycle_condition,
    check_monoassociative_expansion,
    has_property,
    left_bol_substitution_matrices,
    monoassociative_expansion,
)
from loopext.domain.extensions import (
    Cocycle,
    ExtElement,
    build_extension,
    ext_mul,
    extension_element,
    identity_cocycle,
    opposite_cocycle,
    orbit_sign_phi,
    random_cocycle,
    random_phi,
    tangent_like_cocycle,
)
from loopext.domain.finite_loop import MissingInverseError
from loopext.domain.mapping_groups import inner_mapping_group

Z3 = AbGroup(modulus=3, rank=1)
BOL_SUBSTITUTIONS = {"H1": "x=y=0", "H2": "x=z=0", "H3": "y=z=0"}


def perturbed_cocycle(L, kernel, xi, eta, value):
    """Identity cocycle except Q(ξ, η) = value·I."""
    Q = identity_cocycle(L, kernel).Q.copy()
    Q[xi, eta] = value * np.eye(kernel.rank, dtype=np.int64)
    return Cocycle(base=L, kernel=kernel, P=identity_cocycle(L, kernel).P, Q=Q)


def b8_orbit_sign(b8):
    inn = inner_mapping_group(b8)
    return orbit_sign_phi(inn, Z3, (2, 3), AutoMatrix(Z3, ((2,),)))


def sample_cocycles(L):
    inn = inner_mapping_group(L)
    cocycles = [identity_cocycle(L, Z3)]
    cocycles += [random_cocycle(L, Z3, seed=seed) for seed in range(2)]
    cocycles += [
        tangent_like_cocycle(L, random_phi(inn, Z3, seed=seed)) for seed in range(3)
    ]
    return cocycles


@pytest.mark.parametrize("kind", list(PropertyKind))
def test_identity_cocycle_satisfies_every_condition(l6, kind):
    cocycle = identity_cocycle(l6, AbGroup(modulus=4, rank=2))
    result = check_cocycle_condition(cocycle, kind)

    assert result.status is ConditionStatus.HOLDS
    assert result.witness is None


@pytest.mark.parametrize(
    "kind",
    [
        PropertyKind.TWO_SIDED_INVERSE,
        PropertyKind.LEFT_INVERSE,
        PropertyKind.RIGHT_INVERSE,
    ],
)
def test_inverse_conditions_need_inverses(n5, kind):
    with pytest.raises(MissingInverseError):
        check_cocycle_condition(identity_cocycle(n5, Z3), kind)


def test_failing_component_and_witness(z4):
    cocycle = perturbed_cocycle(z4, Z3, 1, 1, 2)

    result = check_cocycle_condition(cocycle, PropertyKind.LEFT_ALTERNATIVE)

    assert result.status is ConditionStatus.FAILS
    assert result.witness == (1, 0)
    assert result.components == ("E1",)
    assert result.detail == "components E1 fail"
    assert check_cocycle_condition(cocycle, PropertyKind.MONOASSOCIATIVE).holds


def test_conditions_match_materialized_extension(corpus_loop):
    for cocycle in sample_cocycles(corpus_loop):
        extension = build_extension(cocycle)
        for kind in PropertyKind:
            if not has_property(corpus_loop, kind).holds:
                assert not has_property(extension, kind).holds
                continue
            condition = check_cocycle_condition(cocycle, kind)
            assert has_property(extension, kind).holds == condition.holds, kind


def test_orbit_sign_extension_of_b8_is_not_left_bol(b8):
    cocycle = tangent_like_cocycle(b8, b8_orbit_sign(b8))

    result = check_cocycle_condition(cocycle, PropertyKind.LEFT_BOL)

    assert result.status is ConditionStatus.FAILS
    assert not has_property(build_extension(cocycle), PropertyKind.LEFT_BOL).holds


@pytest.mark.parametrize("kind", list(PropertyKind))
def test_opposite_cocycle_swaps_conditions(s3, kind):
    # F↔E, J↔H and B↔C under P*(ξ, η) = Q(η, ξ), Q*(ξ, η) = P(η, ξ)
    cocycles = sample_cocycles(s3) + [perturbed_cocycle(s3, Z3, 2, 3, 2)]
    for cocycle in cocycles:
        direct = check_cocycle_condition(cocycle, kind)
        dual = check_cocycle_condition(opposite_cocycle(cocycle), kind.opposite)
        assert direct.status is dual.status


def test_opposite_cocycle_is_an_involution(n5):
    cocycle = random_cocycle(n5, Z3, seed=4)

    assert opposite_cocycle(opposite_cocycle(cocycle)) == cocycle


def test_monoassociative_expansion_matches_products(n5):
    cocycle = random_cocycle(n5, AbGroup(modulus=4, rank=2), seed=1)

    for index in range(n5.order * 16):
        a = extension_element(cocycle, index)
        square = ext_mul(cocycle, a, a)
        assert monoassociative_expansion(cocycle, a) == (
            ext_mul(cocycle, a, square),
            ext_mul(cocycle, square, a),
        )


def test_monoassociative_expansion_decides_the_extension(corpus_loop):
    for cocycle in sample_cocycles(corpus_loop):
        expanded = check_monoassociative_expansion(cocycle)
        extension = build_extension(cocycle)
        direct = has_property(extension, PropertyKind.MONOASSOCIATIVE)
        assert expanded.holds == direct.holds


def test_monoassociative_expansion_witness(z4):
    cocycle = perturbed_cocycle(z4, Z3, 1, 2, 2)

    expanded = check_monoassociative_expansion(cocycle)

    assert expanded.witness == (1, 1)
    condition = check_cocycle_condition(cocycle, PropertyKind.MONOASSOCIATIVE)
    assert condition.witness == (1,)
    left, right = monoassociative_expansion(cocycle, ExtElement(1, Z3.vector([1])))
    assert left.fiber != right.fiber


def test_left_bol_substitutions_hold_for_identity_cocycle(b8):
    cocycle = identity_cocycle(b8, Z3)

    for lhs, rhs in left_bol_substitution_matrices(cocycle, 3, 5, 6).values():
        assert np.array_equal(lhs, rhs)


def test_left_bol_substitutions_locate_failing_components(b8):
    cocycle = tangent_like_cocycle(b8, b8_orbit_sign(b8))
    result = check_cocycle_condition(cocycle, PropertyKind.LEFT_BOL)

    sides = left_bol_substitution_matrices(cocycle, *result.witness)

    for component, key in BOL_SUBSTITUTIONS.items():
        lhs, rhs = sides[key]
        assert (component in result.components) == (not np.array_equal(lhs, rhs))
