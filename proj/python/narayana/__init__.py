"""Exact Narayana, Catalan and Legendre computations.

Rationals come back as fractions.Fraction and polynomials as coefficient
lists, lowest degree first.
"""

from ._core import (
    PreconditionError,
    catalan,
    catalan_parity_scan,
    check_identity,
    enumerate_dyck,
    family_weight,
    identity_min_n,
    identity_names,
    integral_representation_check,
    involution_verify,
    lagrange_coefficient_check,
    legendre_poly,
    narayana_number,
    narayana_poly,
    pell,
    phi,
    schroeder,
)

__all__ = [
    "PreconditionError",
    "catalan",
    "catalan_parity_scan",
    "check_identity",
    "enumerate_dyck",
    "family_weight",
    "identity_min_n",
    "identity_names",
    "integral_representation_check",
    "involution_verify",
    "lagrange_coefficient_check",
    "legendre_poly",
    "narayana_number",
    "narayana_poly",
    "pell",
    "phi",
    "schroeder",
]
