"""
Smooth-loop checks at full sample counts.

The unit suites run the same functions on a few dozen samples; these pin the
counts and tolerances the numerical results are quoted at.
"""

import numpy as np
import pytest

from loopext.domain.conditions import ConditionStatus
from loopext.domain.smooth import (
    builtin_loop,
    cocycle_Q,
    draw_sample,
    inverse_derivative_checks,
    jacobian_cross_check,
    property_suite,
    roundtrip_residual,
    semidirect_residual,
)

pytestmark = [pytest.mark.integration, pytest.mark.slow]


def test_affine_prolongation_matches_semidirect_product():
    affine = builtin_loop("affine")

    assert semidirect_residual(affine, samples=1000) <= 1e-9
    for index in range(1000):
        xi, eta, _ = draw_sample(affine, seed=0, index=index).points
        np.testing.assert_allclose(cocycle_Q(affine, xi, eta), np.eye(2), atol=1e-9)


def test_parabolic_prolongation_divides_and_differentiates():
    parabolic = builtin_loop("parabolic")

    assert roundtrip_residual(parabolic, samples=1000) <= 1e-8
    assert jacobian_cross_check(parabolic, samples=1000) <= 1e-5


@pytest.mark.parametrize("name", ["additive", "affine", "parabolic"])
def test_property_suite_agrees_on_loop_and_prolongation(name):
    report = property_suite(builtin_loop(name), samples=500, tol=1e-8)

    assert report.passed
    for row in report.rows:
        assert row.holds_loop == row.holds_prolongation
        if name == "parabolic":
            assert not row.holds_loop
            assert row.witness is not None
        else:
            assert row.holds_loop


def test_affine_inverse_derivatives_at_full_scale():
    checks = inverse_derivative_checks(builtin_loop("affine"), samples=500, tol=1e-9)

    assert [c.status for c in checks] == [ConditionStatus.HOLDS] * 4
