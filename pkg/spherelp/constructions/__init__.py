"""Init file for constructions."""

from .cubic import (
    L1InclusionResult,
    cubic_frequencies,
    cubic_g3,
    cubic_witness,
    kissing_points_3d,
    l1_hull_vertices,
    l1_region_inclusion_check,
)
from .hexagonal import (
    AFFINE_MAP,
    SignCertificate,
    cosine_product_identity,
    exact_region_sign_2d,
    hex_frequencies,
    hex_g2,
    hex_witness,
    kissing_points_2d,
    lemma_f,
)
from .one_dim import (
    OneDimCoefficients,
    fourier_coefficient_quadrature,
    one_dim_closed_form,
    one_dim_coeffs,
    one_dim_series,
    one_dim_witness,
    s_coefficient,
)
from .registry import (
    CONSTRUCTION_NAMES,
    PackingWitness,
    construct,
    packing_witness,
    parse_name,
)

__all__ = [
    "AFFINE_MAP",
    "CONSTRUCTION_NAMES",
    "L1InclusionResult",
    "OneDimCoefficients",
    "PackingWitness",
    "SignCertificate",
    "construct",
    "cosine_product_identity",
    "cubic_frequencies",
    "cubic_g3",
    "cubic_witness",
    "exact_region_sign_2d",
    "fourier_coefficient_quadrature",
    "hex_frequencies",
    "hex_g2",
    "hex_witness",
    "kissing_points_2d",
    "kissing_points_3d",
    "l1_hull_vertices",
    "l1_region_inclusion_check",
    "lemma_f",
    "one_dim_closed_form",
    "one_dim_coeffs",
    "one_dim_series",
    "one_dim_witness",
    "packing_witness",
    "parse_name",
    "s_coefficient",
]
