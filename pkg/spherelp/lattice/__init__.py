"""Init file for lattice."""

from .lattice import (
    Lattice,
    QuotientNormResult,
    cubic_sqrt2_lattice,
    dual_basis,
    dual_lattice,
    enumerate_coefficients,
    enumerate_points,
    fundamental_coefficients,
    hexagonal_lattice,
    in_lattice,
    integer_lattice,
    lattice_from_dict,
    lattice_from_name,
    lattice_to_dict,
    make_lattice,
    quotient_norm,
    quotient_norms,
    reduce_to_fundamental,
    shortest_vector_norm,
)

__all__ = [
    "Lattice",
    "QuotientNormResult",
    "cubic_sqrt2_lattice",
    "dual_basis",
    "dual_lattice",
    "enumerate_coefficients",
    "enumerate_points",
    "fundamental_coefficients",
    "hexagonal_lattice",
    "in_lattice",
    "integer_lattice",
    "lattice_from_dict",
    "lattice_from_name",
    "lattice_to_dict",
    "make_lattice",
    "quotient_norm",
    "quotient_norms",
    "reduce_to_fundamental",
    "shortest_vector_norm",
]
