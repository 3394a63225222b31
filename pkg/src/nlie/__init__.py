"""The Lie algebra Lambda^(n-1)(G) / V(G) of an n-Lie algebra G, over the rationals."""

from .algebra import (
    NLieAlgebra,
    abelian,
    ad,
    bracket,
    builtin,
    check_filippov,
    derivations,
    heisenberg3,
    invariants,
    is_derivation,
    is_nlie_morphism,
    is_stable,
    simple_nlie,
    sl2,
)
from .cohomology import Cochain, cohomology_dims, d_squared_zero, differential
from .exterior import ad_ext, extend_derivation, wedge
from .lie import LieAlgebra
from .linalg import Matrix, Subspace, kernel_basis, quotient_map, rref, span
from .quotient import (
    QuotientLie,
    build,
    check_ad_morphism,
    check_ad_well_defined,
    check_lie,
    compute_V,
    induced_lie_morphism,
    is_nlie_cartan,
    is_nlie_ideal,
    push_subspace,
)

__all__ = [
    "Cochain", "LieAlgebra", "Matrix", "NLieAlgebra", "QuotientLie", "Subspace",
    "abelian", "ad", "ad_ext", "bracket", "build", "builtin", "check_ad_morphism",
    "check_ad_well_defined", "check_filippov", "check_lie", "cohomology_dims", "compute_V",
    "d_squared_zero", "derivations", "differential", "extend_derivation", "heisenberg3",
    "induced_lie_morphism", "invariants", "is_derivation", "is_nlie_cartan", "is_nlie_ideal",
    "is_nlie_morphism", "is_stable", "kernel_basis", "push_subspace", "quotient_map", "rref",
    "simple_nlie", "sl2", "span", "wedge",
]
