"""Point counts of bounded height on W_n, its leading constant, and finite-field checks."""

from ._core import (
    ContractViolation,
    NonPrimitiveImage,
    ResourceLimit,
    assemble_constant,
    beta_tilde,
    compose,
    count_points,
    count_points_bruteforce,
    enumerate_variety,
    eulerian_polynomial,
    excedance_polynomial,
    factorize,
    is_reduced,
    local_density,
    local_factor_poly,
    local_factor_poly_graph,
    polytope_volume,
    run_cli,
    verify,
)

__all__ = [
    "ContractViolation",
    "NonPrimitiveImage",
    "ResourceLimit",
    "assemble_constant",
    "beta_tilde",
    "compose",
    "count_points",
    "count_points_bruteforce",
    "enumerate_variety",
    "eulerian_polynomial",
    "excedance_polynomial",
    "factorize",
    "is_reduced",
    "local_density",
    "local_factor_poly",
    "local_factor_poly_graph",
    "polytope_volume",
    "run_cli",
    "verify",
]
