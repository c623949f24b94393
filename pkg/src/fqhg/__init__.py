"""Exact finite quantum hypergroups over Q(i)."""

from .algebra import (
    Algebra,
    find_faithful_functional,
    gram_matrix,
    is_faithful,
    is_positive,
    modular_automorphism,
    validate_algebra,
    validate_coproduct,
)
from .constructions import (
    alpha_dual_pair,
    alpha_family,
    counterexample,
    hecke_pair,
    omega_free_product,
    omega_from_group,
    twosub_pair,
)
from .duality import FQH, FQHCertificate, check_biduality, dual_fqh, fourier, inverse_fourier, verify_fqh
from .errors import FQHError, MalformedInput, PreconditionError, ShapeError
from .exactnum import Matrix, Scalar, parse_scalar
from .groups import FiniteGroup, Subgroup, double_cosets, preset, subgroup_generate
from .integrals import invariant_space, is_invariant, solve_antipode, verify_integral
from .pairing import DualPair, check_star_pairing, induced_coproduct, induced_counit

__all__ = [
    "Algebra", "find_faithful_functional", "gram_matrix", "is_faithful", "is_positive",
    "modular_automorphism", "validate_algebra", "validate_coproduct",
    "alpha_dual_pair", "alpha_family", "counterexample", "hecke_pair",
    "omega_free_product", "omega_from_group", "twosub_pair",
    "FQH", "FQHCertificate", "check_biduality", "dual_fqh", "fourier", "inverse_fourier", "verify_fqh",
    "FQHError", "MalformedInput", "PreconditionError", "ShapeError",
    "Matrix", "Scalar", "parse_scalar",
    "FiniteGroup", "Subgroup", "double_cosets", "preset", "subgroup_generate",
    "invariant_space", "is_invariant", "solve_antipode", "verify_integral",
    "DualPair", "check_star_pairing", "induced_coproduct", "induced_counit",
]
__version__ = "0.1.0"
