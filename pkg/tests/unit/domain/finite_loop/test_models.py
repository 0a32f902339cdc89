import numpy as np
import pytest

from loopext.domain.finite_loop import (
    ElementOutOfRangeError,
    FiniteLoop,
    InvalidLoopError,
    MissingInverseError,
    StructuralError,
    as_cayley_table,
)


def test_finite_loop_exposes_order_and_elements(z4):
    assert z4.order == 4
    assert list(z4.elements) == [0, 1, 2, 3]
    assert repr(z4) == "FiniteLoop(order=4)"


def test_table_is_read_only(z4):
    with pytest.raises(ValueError):
        z4.table[1, 1] = 0


def test_division_tables_invert_multiplication(n5):
    for x in n5.elements:
        for y in n5.elements:
            assert n5.table[x, n5.ldiv_table[x, y]] == y
            assert n5.table[n5.rdiv_table[y, x], x] == y


def test_square_and_inverse_on_cyclic_group(z4):
    assert [z4.square(x) for x in z4.elements] == [0, 2, 0, 2]
    assert [z4.inverse(x) for x in z4.elements] == [0, 3, 2, 1]


def test_inverse_reports_both_one_sided_inverses(n5):
    assert n5.inverse(1) == 1
    assert n5.square(2) == 4

    with pytest.raises(MissingInverseError) as exc_info:
        n5.inverse(2)

    assert (exc_info.value.left, exc_info.value.right) == (4, 3)


@pytest.mark.parametrize("x", [-1, 4])
def test_element_methods_reject_out_of_range(z4, x):
    with pytest.raises(ElementOutOfRangeError):
        z4.square(x)
    with pytest.raises(ElementOutOfRangeError):
        z4.inverse(x)


def test_loops_compare_by_table(z4):
    same = FiniteLoop.from_rows(z4.rows())

    assert same == z4
    assert hash(same) == hash(z4)


def test_invalid_loop_error_carries_report():
    with pytest.raises(InvalidLoopError) as exc_info:
        FiniteLoop.from_rows([[0, 1], [0, 1]])

    report = exc_info.value.report
    assert report.bad_rows == ()
    assert report.bad_columns == (0, 1)
    assert "column 0 is not the identity column" in report.identity_problems
    assert not report.valid


@pytest.mark.parametrize(
    "rows,match",
    [
        ([[0, 1, 2], [1, 0, 2]], "n×n"),
        ([[0, 1], [1]], "unequal lengths"),
        ([[0, 1], [1, 2]], "outside"),
        ([[0.5, 1], [1, 0]], "integers"),
    ],
)
def test_as_cayley_table_rejects_malformed_input(rows, match):
    with pytest.raises(StructuralError, match=match):
        as_cayley_table(rows)


def test_as_cayley_table_accepts_integral_floats():
    table = as_cayley_table(np.array([[0.0, 1.0], [1.0, 0.0]]))

    assert table.dtype == np.int32
    assert table.tolist() == [[0, 1], [1, 0]]
