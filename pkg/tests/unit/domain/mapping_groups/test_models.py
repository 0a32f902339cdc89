import pytest

from loopext.domain.mapping_groups import NotAPermutationError, Perm, PermGroup


def test_perm_rejects_non_bijections():
    with pytest.raises(NotAPermutationError):
        Perm((0, 0, 2))


def test_perm_application_and_fixed_points():
    p = Perm((1, 2, 0, 3))

    assert p(0) == 1
    assert p.apply(2) == 0
    assert p.fixes(3)
    assert not p.fixes(0)


@pytest.mark.parametrize(
    "images,notation",
    [
        ((0, 1, 2), "()"),
        ((1, 2, 0), "(0 1 2)"),
        ((1, 0, 3, 2), "(0 1)(2 3)"),
        ((0, 3, 2, 1), "(1 3)"),
    ],
)
def test_cycle_notation(images, notation):
    assert Perm(images).cycle_notation() == notation


def test_one_line_rendering():
    assert str(Perm((2, 0, 1))) == "2 0 1"


def test_perm_group_membership():
    identity, rotation = Perm((0, 1, 2)), Perm((1, 2, 0))
    group = PermGroup(degree=3, elements=(identity, rotation, Perm((2, 0, 1))))

    assert rotation in group
    assert Perm((1, 0, 2)) not in group
    assert group.index_of(rotation) == 1
    assert len(group) == group.order == 3
    assert list(group)[0] == identity
