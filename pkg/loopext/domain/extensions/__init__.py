"""
Extensions domain package.

T-quasigroups, linear abelian extensions F(P, Q), homomorphisms
Φ: Inn(L) → Aut(A) and the tangent-like cocycles they induce.
"""

from .exceptions import (
    CocycleShapeError,
    ExtensionError,
    ExtensionSizeError,
    PermutationRepresentationError,
    PhiConflictError,
    PhiCoverageError,
    PhiDomainError,
    UnsupportedKernelError,
)
from .models import (
    Cocycle,
    CocycleReport,
    ExtElement,
    PhiHom,
    TQuasigroup,
    TQuasigroupParams,
)
from .phi import (
    orbit_sign_phi,
    permutation_phi,
    phi_from_generators,
    random_phi,
    trivial_phi,
    verify_homomorphism,
)
from .repository import (
    format_cocycle,
    format_phi,
    read_cocycle,
    read_cocycle_text,
    read_phi,
    read_phi_text,
    write_cocycle,
    write_phi,
)
from .service import (
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
    t_quasigroup,
    tangent_like_cocycle,
    validate_cocycle,
)

__all__ = [
    "CocycleShapeError",
    "ExtensionError",
    "ExtensionSizeError",
    "PermutationRepresentationError",
    "PhiConflictError",
    "PhiCoverageError",
    "PhiDomainError",
    "UnsupportedKernelError",
    "Cocycle",
    "CocycleReport",
    "ExtElement",
    "PhiHom",
    "TQuasigroup",
    "TQuasigroupParams",
    "build_extension",
    "ext_ldiv",
    "ext_left_inverse",
    "ext_mul",
    "ext_rdiv",
    "ext_right_inverse",
    "extension_element",
    "extension_index",
    "identity_cocycle",
    "opposite_cocycle",
    "random_cocycle",
    "t_quasigroup",
    "tangent_like_cocycle",
    "validate_cocycle",
    "orbit_sign_phi",
    "permutation_phi",
    "phi_from_generators",
    "random_phi",
    "trivial_phi",
    "verify_homomorphism",
    "format_cocycle",
    "format_phi",
    "read_cocycle",
    "read_cocycle_text",
    "read_phi",
    "read_phi_text",
    "write_cocycle",
    "write_phi",
]
