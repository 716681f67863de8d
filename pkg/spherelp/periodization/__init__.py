"""Init file for periodization."""

from .periodize import (
    PeriodizedValue,
    PoissonResidual,
    direct_truncation,
    periodize_direct,
    periodize_spectrum,
    poisson_residual,
    sharp_sequence,
    spectral_tail_bound,
)
from .profiles import (
    PROFILES,
    AdmissibleProfile1D,
    ce_h_profile,
    get_profile,
    profile_hat_zero,
    triangle_profile,
)

__all__ = [
    "PROFILES",
    "AdmissibleProfile1D",
    "PeriodizedValue",
    "PoissonResidual",
    "ce_h_profile",
    "direct_truncation",
    "get_profile",
    "periodize_direct",
    "periodize_spectrum",
    "poisson_residual",
    "profile_hat_zero",
    "sharp_sequence",
    "spectral_tail_bound",
    "triangle_profile",
]
