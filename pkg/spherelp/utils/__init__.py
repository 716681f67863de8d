"""Init file for utils."""

from .linalg_utils import half_diagonals, integer_box, operator_norm, sign_vectors
from .quadrature import QuadratureResult, gauss_legendre_panels, integrate
from .serialization import (
    comment_lines,
    read_csv_tables,
    read_json,
    write_csv,
    write_json,
)

__all__ = [
    "QuadratureResult",
    "comment_lines",
    "gauss_legendre_panels",
    "half_diagonals",
    "integer_box",
    "integrate",
    "operator_norm",
    "read_csv_tables",
    "read_json",
    "sign_vectors",
    "write_csv",
    "write_json",
]
