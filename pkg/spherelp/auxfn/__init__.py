"""Init file for auxfn."""

from .certification import CertificationReport, certification_grid, certify_nonpositive
from .cosine_series import (
    CosineSeries,
    DualMembership,
    cell_integral,
    cosine_sum,
    curvature_constant,
    evaluate,
    evaluate_many,
    gradient,
    gradient_many,
    hat_zero,
    lipschitz_constant,
    make_series,
    periodicity_residual,
    sample_dump,
    scaled,
    series_from_dict,
    series_to_dict,
    sharp,
    verify_dual_membership,
)

__all__ = [
    "CertificationReport",
    "CosineSeries",
    "DualMembership",
    "cell_integral",
    "certification_grid",
    "certify_nonpositive",
    "cosine_sum",
    "curvature_constant",
    "evaluate",
    "evaluate_many",
    "gradient",
    "gradient_many",
    "hat_zero",
    "lipschitz_constant",
    "make_series",
    "periodicity_residual",
    "sample_dump",
    "scaled",
    "series_from_dict",
    "series_to_dict",
    "sharp",
    "verify_dual_membership",
]
