from ._core_types import (
    BoundKind,
    FloatArray,
    IntArray,
    LpStatus,
    PointLike,
    VectorsLike,
)
from ._errors import (
    DimensionMismatchError,
    DocumentFormatError,
    EmptyFrequencySetError,
    EmptyListError,
    GridTooFineError,
    InvalidSeriesError,
    MissingFourierError,
    MTooSmallError,
    NegativeSpectrumError,
    NonFinitePointError,
    NotInRegionError,
    QuadratureNotConvergedError,
    RadiusTooLargeError,
    SingularBasisError,
    SpherelpError,
    TailNotBoundedError,
    VNotInLatticeError,
)

__all__ = [
    "BoundKind",
    "DimensionMismatchError",
    "DocumentFormatError",
    "EmptyFrequencySetError",
    "EmptyListError",
    "FloatArray",
    "GridTooFineError",
    "IntArray",
    "InvalidSeriesError",
    "LpStatus",
    "MTooSmallError",
    "MissingFourierError",
    "NegativeSpectrumError",
    "NonFinitePointError",
    "NotInRegionError",
    "PointLike",
    "QuadratureNotConvergedError",
    "RadiusTooLargeError",
    "SingularBasisError",
    "SpherelpError",
    "TailNotBoundedError",
    "VNotInLatticeError",
    "VectorsLike",
]
