"""Exceptions raised by spherelp.

Every error derives from ``SpherelpError`` and from ``ValueError``, so callers
that only care about bad input can keep catching ``ValueError``.
"""


class SpherelpError(ValueError):
    """Base class for all spherelp errors."""


class SingularBasisError(SpherelpError):
    """Basis vectors are (numerically) linearly dependent."""


class DimensionMismatchError(SpherelpError):
    """Vectors or points do not share the dimension of the lattice."""


class NonFinitePointError(SpherelpError):
    """A point has a NaN or infinite component."""


class RadiusTooLargeError(SpherelpError):
    """Enumeration would visit more candidates than the configured cap."""


class GridTooFineError(SpherelpError):
    """Certification grid would exceed the configured sample cap."""


class VNotInLatticeError(SpherelpError):
    """A shift vector is not a point of the scaled lattice."""


class MTooSmallError(SpherelpError):
    """The one-dimensional construction needs m >= 3."""


class NotInRegionError(SpherelpError):
    """Point lies strictly inside the quotient-norm unit ball."""


class QuadratureNotConvergedError(SpherelpError):
    """Panel refinement did not reach the requested tolerance."""


class TailNotBoundedError(SpherelpError):
    """Decay exponent does not give a summable tail."""


class NegativeSpectrumError(SpherelpError):
    """A sampled Fourier value is negative."""


class MissingFourierError(SpherelpError):
    """The profile has no Fourier evaluator."""


class EmptyFrequencySetError(SpherelpError):
    """No nonzero dual frequency lies within the requested radius."""


class EmptyListError(SpherelpError):
    """An aggregation received no entries."""


class InvalidSeriesError(SpherelpError):
    """Cosine series terms violate a structural invariant."""


class DocumentFormatError(SpherelpError):
    """A JSON or CSV document is malformed."""
