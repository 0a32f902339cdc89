"""
Full-scale extension audits on the fixture corpus.

Every check compares the property of the materialized extension with the
base property and the cocycle condition, so these runs exercise the
condition code against brute force.
"""

import pytest

from loopext.domain.abelian import AbGroup
from loopext.domain.conditions import AuditService, PropertyKind, audit_cocycle
from loopext.domain.extensions import random_phi, tangent_like_cocycle
from loopext.domain.mapping_groups import inner_mapping_group

KERNELS = [
    AbGroup(modulus=2, rank=1),
    AbGroup(modulus=3, rank=1),
    AbGroup(modulus=2, rank=2),
]


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.parametrize("name", ["z4", "s3", "n5", "l6"])
@pytest.mark.parametrize("kernel", KERNELS, ids=lambda kernel: kernel.spec)
def test_random_cocycles_satisfy_the_extension_criterion(repository, name, kernel):
    summary = AuditService(kernel, seed=0).run(repository.load(name), trials=100)

    assert len(summary.reports) == 100 * len(PropertyKind)
    assert summary.ok, summary.violations[:3]


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.parametrize("name", ["z4", "s3", "n5", "l6", "b8"])
def test_tangent_like_extensions_satisfy_the_extension_criterion(repository, name):
    L = repository.load(name)
    inn = inner_mapping_group(L)
    kernel = AbGroup(modulus=3, rank=1)

    for seed in range(4):
        cocycle = tangent_like_cocycle(L, random_phi(inn, kernel, seed=seed))
        reports = audit_cocycle(cocycle, trial=seed)

        assert all(report.consistent for report in reports), [
            report for report in reports if not report.consistent
        ]
