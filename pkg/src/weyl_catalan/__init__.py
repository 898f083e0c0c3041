"""Affine Weyl groups, p-stable elements, the Anderson map, m-Shi arrangements
and the type A combinatorics of parking functions and labelled Dyck paths."""

from .affine_weyl import (
    AffineRoot,
    AffineWeylElement,
    NotStableError,
    TorusElement,
    anderson,
    anderson_inverse,
    aw_compose,
    aw_identity,
    aw_invert,
    compute_w_p,
    enumerate_p_stable,
    is_p_stable,
    root_address,
    alcove_address,
)
from .core_roots import (
    CartanType,
    EnumerationBoundError,
    RootSystem,
    WeylElement,
    build_root_system,
    weyl_enumerate,
)
from .shi import (
    FilterChain,
    NNParkClass,
    gamma,
    geometric_chains,
    is_m_shi_alcove,
    minimal_alcove_of_region,
    theta_inverse,
    theta_map,
    zeta,
)
from .type_a import (
    AffinePermutation,
    DiagLabelledPath,
    VertLabelledPath,
    anderson_gmv,
    anderson_gmv_inverse,
    chi,
    chi_inverse,
    zeta_haglund,
    zeta_hl,
)

__version__ = "0.1.0"

__all__ = [
    "AffinePermutation",
    "AffineRoot",
    "AffineWeylElement",
    "alcove_address",
    "anderson",
    "anderson_gmv",
    "anderson_gmv_inverse",
    "anderson_inverse",
    "aw_compose",
    "aw_identity",
    "aw_invert",
    "build_root_system",
    "CartanType",
    "chi",
    "chi_inverse",
    "compute_w_p",
    "DiagLabelledPath",
    "enumerate_p_stable",
    "EnumerationBoundError",
    "FilterChain",
    "gamma",
    "geometric_chains",
    "is_m_shi_alcove",
    "is_p_stable",
    "minimal_alcove_of_region",
    "NNParkClass",
    "NotStableError",
    "root_address",
    "RootSystem",
    "theta_inverse",
    "theta_map",
    "TorusElement",
    "VertLabelledPath",
    "weyl_enumerate",
    "WeylElement",
    "zeta",
    "zeta_haglund",
    "zeta_hl",
]
