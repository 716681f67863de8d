"""Init file for bounds."""

from .density import (
    DensityBound,
    Provenance,
    ball_volume_factor,
    bound_from_series,
    bound_from_sharp,
    gamma_half_integer,
    lower_bound_from_witness,
    sequence_bound,
)
from .report import (
    CSV_COLUMNS,
    LIMINF_CAVEAT,
    LIMINF_NOTE,
    PER_M_NOTE,
    bounds_to_frame,
    format_report,
    summarize_tables,
)

__all__ = [
    "CSV_COLUMNS",
    "LIMINF_CAVEAT",
    "LIMINF_NOTE",
    "PER_M_NOTE",
    "DensityBound",
    "Provenance",
    "ball_volume_factor",
    "bound_from_series",
    "bound_from_sharp",
    "bounds_to_frame",
    "format_report",
    "gamma_half_integer",
    "lower_bound_from_witness",
    "sequence_bound",
    "summarize_tables",
]
