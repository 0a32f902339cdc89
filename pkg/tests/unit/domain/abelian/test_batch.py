import numpy as np
import pytest

from loopext.domain.abelian import AbGroup, NotAutomorphismError, batch


def test_matmul_reduces_left_to_right():
    a = np.array([[1, 1], [0, 1]])
    b = np.array([[1, 0], [1, 1]])

    assert np.array_equal(batch.matmul(a, b, modulus=3), [[2, 1], [1, 1]])
    assert np.array_equal(batch.matmul(b, a, modulus=3), [[1, 1], [1, 2]])


def test_determinants_over_a_stack():
    stack = np.array([[[1, 2], [3, 4]], [[2, 0], [0, 3]]])

    assert batch.determinants(stack).tolist() == [-2, 6]


def test_determinants_of_rank_one():
    assert batch.determinants(np.array([[[5]], [[-2]]])).tolist() == [5, -2]


def test_inverse_of_a_stack():
    group = AbGroup(modulus=5, rank=2)
    stack = np.array([[[1, 2], [3, 4]], [[2, 0], [0, 3]], [[0, 1], [1, 0]]])

    product = batch.matmul(stack, batch.inverse(stack, group), modulus=5)

    assert np.array_equal(product, batch.identity_stack((3,), 2))


def test_inverse_rejects_singular_entries():
    group = AbGroup(modulus=4, rank=2)

    with pytest.raises(NotAutomorphismError):
        batch.inverse(np.array([[[2, 0], [0, 1]]]), group)


def test_inverse_error_names_the_singular_matrix():
    group = AbGroup(modulus=4, rank=2)
    stack = np.array([[[1, 0], [0, 1]], [[1, 1], [0, 1]], [[6, 1], [0, 1]]])

    with pytest.raises(NotAutomorphismError) as exc_info:
        batch.inverse(stack, group)

    assert exc_info.value.entries == [[2, 1], [0, 1]]
    assert exc_info.value.determinant == 2
    assert str(exc_info.value).startswith("Matrix [[2, 1], [0, 1]] has determinant 2")


def test_is_invertible():
    stack = np.array([[[2, 0], [0, 1]], [[1, 1], [0, 1]], [[3, 0], [0, 3]]])

    assert batch.is_invertible(stack, AbGroup(modulus=4, rank=2)).tolist() == [
        False,
        True,
        True,
    ]
    assert batch.is_invertible(stack, AbGroup(modulus=0, rank=2)).tolist() == [
        False,
        True,
        False,
    ]


def test_identity_stack_is_writable():
    stack = batch.identity_stack((2, 3), 2)
    stack[0, 0, 0, 1] = 1

    assert stack.shape == (2, 3, 2, 2)
    assert stack[1, 2].tolist() == [[1, 0], [0, 1]]
