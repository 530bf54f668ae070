"""Riemann-Stieltjes quadrature and Stieltjes boundary transforms on the unit disk."""

from ._core import (
    BoundaryFunction,
    DomainError,
    SpecError,
    analytic_kernel,
    boundary_cot_kernel,
    cantor,
    catalog,
    conj_poisson,
    conj_poisson_dt,
    corollary10_residual,
    duality_residual,
    hilbert,
    limit_check,
    parse_spec,
    poisson,
    poisson_dtheta,
    rs_integral,
    singular_cauchy,
    step,
    transform,
    zoo,
)

__all__ = [
    "BoundaryFunction",
    "DomainError",
    "SpecError",
    "analytic_kernel",
    "boundary_cot_kernel",
    "cantor",
    "catalog",
    "conj_poisson",
    "conj_poisson_dt",
    "corollary10_residual",
    "duality_residual",
    "hilbert",
    "limit_check",
    "parse_spec",
    "poisson",
    "poisson_dtheta",
    "rs_integral",
    "singular_cauchy",
    "step",
    "transform",
    "zoo",
]
