"""Full-rank lattices, their integer scalings and dual lattices."""

import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np

from spherelp._types import (
    DimensionMismatchError,
    DocumentFormatError,
    FloatArray,
    IntArray,
    NonFinitePointError,
    PointLike,
    RadiusTooLargeError,
    SingularBasisError,
    VectorsLike,
)
from spherelp.config import DEFAULTS
from spherelp.utils.linalg_utils import half_diagonals, integer_box, operator_norm

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Lattice:
    """Lattice Λ_m = mΛ generated by the columns of ``basis`` scaled by ``m``.

    Instances are built through :func:`make_lattice`, which validates the basis.
    The stored arrays are read-only.

    Attributes
    ----------
        basis (FloatArray): Matrix B whose columns v_1..v_n generate Λ.
        m (int): Integer scale.

    """

    basis: FloatArray
    m: int = 1

    @property
    def n(self) -> int:
        """Dimension of the ambient space."""
        return int(self.basis.shape[0])

    @cached_property
    def scaled_basis(self) -> FloatArray:
        """Generator matrix mB of Λ_m."""
        scaled = self.m * self.basis
        scaled.setflags(write=False)
        return scaled

    @cached_property
    def scaled_inverse(self) -> FloatArray:
        """Inverse (mB)⁻¹, mapping points to coefficient space."""
        inverse = np.linalg.inv(self.scaled_basis)
        inverse.setflags(write=False)
        return inverse

    @cached_property
    def inverse_norm(self) -> float:
        """Upper estimate of the spectral norm of (mB)⁻¹."""
        return operator_norm(np.asarray(self.scaled_inverse))

    @property
    def base_determinant(self) -> float:
        """Covolume |det B| of the unscaled lattice Λ."""
        return float(abs(np.linalg.det(self.basis)))

    @property
    def determinant(self) -> float:
        """Covolume |Λ_m| = mⁿ|det B|."""
        return float(self.m**self.n) * self.base_determinant

    @cached_property
    def covering_bound(self) -> float:
        """Largest half diagonal of the fundamental parallelepiped of Λ_m.

        Every coset x + Λ_m has a representative within this distance of 0.
        """
        return float(np.max(half_diagonals(self.scaled_basis)))

    @cached_property
    def reduction_offsets(self) -> FloatArray:
        """Lattice vectors that can be nearest to a rounded representative."""
        offsets = enumerate_points(self, np.zeros(self.n), 2.0 * self.covering_bound)
        offsets.setflags(write=False)
        return offsets

    def with_scale(self, m: int) -> "Lattice":
        """Return the same base lattice with a different scale.

        Args:
        ----
            m (int): New scale.

        Returns:
        -------
            Lattice: Lattice mΛ.

        """
        return make_lattice(self.basis.T, m)


@dataclass(frozen=True)
class QuotientNormResult:
    """Distance of a point to the lattice, with a minimising translate.

    Attributes
    ----------
        value (float): ‖[x]‖ = min over u in x + Λ_m of ‖u‖₂.
        witness (FloatArray): Translate u achieving the minimum.

    """

    value: float
    witness: FloatArray


def make_lattice(basis: VectorsLike, m: int = 1) -> Lattice:
    """Build a lattice from n basis vectors.

    Args:
    ----
        basis (VectorsLike): Sequence of n vectors v_1..v_n, each of length n.
        m (int): Positive integer scale.

    Returns:
    -------
        Lattice: The lattice mΛ.

    Raises:
    ------
        DimensionMismatchError: If the vectors do not all have length n.
        SingularBasisError: If |det B| < 1e-12 times the product of the vector norms.
        ValueError: If m is not a positive integer.

    """
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ValueError(f"Scale m must be a positive integer, got {m}.")
    try:
        vectors = np.array(basis, dtype=np.float64)
    except ValueError as err:
        raise DimensionMismatchError(
            f"Basis vectors have unequal lengths: {err}"
        ) from err
    if vectors.ndim != 2 or vectors.shape[0] == 0:
        raise DimensionMismatchError(
            f"Basis must be a nonempty list of vectors, got shape {vectors.shape}."
        )
    if vectors.shape[0] != vectors.shape[1]:
        raise DimensionMismatchError(
            f"Need n vectors of length n, got {vectors.shape[0]} vectors "
            f"of length {vectors.shape[1]}."
        )
    if not np.all(np.isfinite(vectors)):
        raise NonFinitePointError("Basis vectors must be finite.")
    matrix = np.ascontiguousarray(vectors.T)
    norms = np.linalg.norm(matrix, axis=0)
    det = abs(float(np.linalg.det(matrix)))
    if np.any(norms == 0.0) or det < DEFAULTS.structural_tol * float(np.prod(norms)):
        raise SingularBasisError(f"Basis is singular: |det B| = {det:.3e}.")
    matrix.setflags(write=False)
    return Lattice(basis=matrix, m=int(m))


def integer_lattice(n: int, m: int = 1) -> Lattice:
    """Lattice mℤⁿ."""
    return make_lattice(np.eye(n), m)


def hexagonal_lattice(m: int = 1) -> Lattice:
    """Hexagonal lattice generated by [1, 0] and [1/2, √3/2], scaled by m."""
    return make_lattice([[1.0, 0.0], [0.5, math.sqrt(3) / 2]], m)


def cubic_sqrt2_lattice(m: int = 1) -> Lattice:
    """Cubic lattice √2ℤ³, scaled by m."""
    return make_lattice(math.sqrt(2) * np.eye(3), m)


def lattice_from_name(name: str, m: int = 1) -> Lattice:
    """Named lattice: ``z<n>``, ``hex`` or ``cubic``.

    Args:
    ----
        name (str): Lattice name.
        m (int): Scale.

    Returns:
    -------
        Lattice: The named lattice scaled by m.

    Raises:
    ------
        ValueError: For unknown names.

    """
    key = name.strip().lower()
    if key in ("hex", "hexagonal"):
        return hexagonal_lattice(m)
    if key in ("cubic", "cubic3"):
        return cubic_sqrt2_lattice(m)
    if key.startswith("z") and key[1:].isdigit() and int(key[1:]) >= 1:
        return integer_lattice(int(key[1:]), m)
    raise ValueError(f"Unknown lattice name {name!r}; expected z<n>, hex or cubic.")


def dual_basis(lattice: Lattice) -> FloatArray:
    """Basis W of the dual lattice Λ_m*.

    W is the inverse transpose of mB, so ⟨(mB)e_i, We_j⟩ = δ_ij.

    Args:
    ----
        lattice (Lattice): The lattice.

    Returns:
    -------
        FloatArray: Matrix whose columns generate Λ_m*.

    """
    return np.ascontiguousarray(lattice.scaled_inverse.T)


def dual_lattice(lattice: Lattice) -> Lattice:
    """The dual lattice Λ_m* as a lattice with scale 1."""
    return make_lattice(dual_basis(lattice).T, 1)


def _as_point(x: PointLike | float, n: int) -> FloatArray:
    point = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if point.shape != (n,):
        raise DimensionMismatchError(
            f"Expected a point of dimension {n}, got {point.shape}."
        )
    if not np.all(np.isfinite(point)):
        raise NonFinitePointError(f"Point {point} has non-finite components.")
    return point


def _as_points(points: PointLike | FloatArray, n: int) -> FloatArray:
    arr = np.asarray(points, dtype=np.float64)
    if n == 1 and arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.shape[1] != n:
        raise DimensionMismatchError(
            f"Expected points of dimension {n}, got {arr.shape}."
        )
    if not np.all(np.isfinite(arr)):
        raise NonFinitePointError("Points must be finite.")
    return arr


def enumerate_coefficients(
    lattice: Lattice,
    center: PointLike | float,
    radius: float,
    cap: int = DEFAULTS.enumeration_cap,
) -> tuple[IntArray, FloatArray]:
    """Integer coefficients and lattice vectors within ``radius`` of ``center``.

    Coefficients k of a lattice vector t = (mB)k satisfy
    ‖k - k_c‖ <= ‖(mB)⁻¹‖·radius with k_c = (mB)⁻¹center, so the integer box
    around k_c of that half width contains every solution.

    Args:
    ----
        lattice (Lattice): The lattice.
        center (PointLike | float): Centre of the ball.
        radius (float): Nonnegative radius.
        cap (int): Maximum number of candidate coefficient vectors.

    Returns:
    -------
        tuple[IntArray, FloatArray]: Coefficients (count, n) and points (count, n).

    Raises:
    ------
        RadiusTooLargeError: If the coefficient box exceeds ``cap`` candidates.
        ValueError: If the radius is negative.

    """
    if radius < 0 or not math.isfinite(radius):
        raise ValueError(f"Radius must be finite and nonnegative, got {radius}.")
    c = _as_point(center, lattice.n)
    inv_norm = lattice.inverse_norm
    k_center = lattice.scaled_inverse @ c
    half_width = inv_norm * radius
    lower = np.ceil(k_center - half_width - DEFAULTS.structural_tol).astype(np.int64)
    upper = np.floor(k_center + half_width + DEFAULTS.structural_tol).astype(np.int64)
    count = float(np.prod(np.maximum(upper - lower + 1, 0).astype(np.float64)))
    if count > cap:
        raise RadiusTooLargeError(
            f"Enumeration of radius {radius} needs {count:.3e} candidates (cap {cap})."
        )
    coeffs = integer_box(lower, upper)
    points = coeffs.astype(np.float64) @ np.asarray(lattice.scaled_basis).T
    slack = DEFAULTS.structural_tol * max(1.0, radius)
    keep = np.linalg.norm(points - c, axis=1) <= radius + slack
    return coeffs[keep], points[keep]


def enumerate_points(
    lattice: Lattice,
    center: PointLike | float,
    radius: float,
    cap: int = DEFAULTS.enumeration_cap,
) -> FloatArray:
    """Lattice vectors t in Λ_m with ‖t - center‖₂ <= radius.

    Args:
    ----
        lattice (Lattice): The lattice.
        center (PointLike | float): Centre of the ball.
        radius (float): Nonnegative radius.
        cap (int): Maximum number of candidate coefficient vectors.

    Returns:
    -------
        FloatArray: Points of shape (count, n), without duplicates.

    """
    _, points = enumerate_coefficients(lattice, center, radius, cap)
    return points


def shortest_vector_norm(lattice: Lattice, dual: bool = False) -> float:
    """Norm of the shortest nonzero vector of Λ_m, or of Λ_m* when ``dual``."""
    target = dual_lattice(lattice) if dual else lattice
    radius = float(np.min(np.linalg.norm(target.scaled_basis, axis=0)))
    points = enumerate_points(target, np.zeros(target.n), radius)
    norms = np.linalg.norm(points, axis=1)
    return float(np.min(norms[norms > DEFAULTS.structural_tol * radius]))


def quotient_norm(lattice: Lattice, x: PointLike | float) -> QuotientNormResult:
    """Distance from x to the nearest point of Λ_m.

    Starts from u₀ = x - (mB)·round((mB)⁻¹x) and enumerates lattice points within
    ‖u₀‖ of x; the shortest x - t wins, earliest in enumeration order on ties.

    Args:
    ----
        lattice (Lattice): The lattice.
        x (PointLike | float): Finite point.

    Returns:
    -------
        QuotientNormResult: Norm and witness translate.

    """
    point = _as_point(x, lattice.n)
    rounded = np.round(lattice.scaled_inverse @ point)
    u0 = point - lattice.scaled_basis @ rounded
    radius = float(np.linalg.norm(u0))
    candidates = enumerate_points(lattice, point, radius)
    translates = point - candidates
    if len(translates) == 0:
        return QuotientNormResult(value=radius, witness=u0)
    norms = np.linalg.norm(translates, axis=1)
    best = int(np.argmin(norms))
    if norms[best] >= radius:
        return QuotientNormResult(value=radius, witness=u0)
    return QuotientNormResult(value=float(norms[best]), witness=translates[best])


def quotient_norms(lattice: Lattice, points: PointLike | FloatArray) -> FloatArray:
    """Vectorised quotient norms of many points.

    Args:
    ----
        lattice (Lattice): The lattice.
        points (PointLike | FloatArray): Points of shape (count, n); in one
            dimension a flat array is accepted.

    Returns:
    -------
        FloatArray: Quotient norm of every point.

    """
    pts = _as_points(points, lattice.n)
    coeffs = pts @ np.asarray(lattice.scaled_inverse).T
    u0 = pts - np.round(coeffs) @ np.asarray(lattice.scaled_basis).T
    best = np.linalg.norm(u0, axis=1)
    for offset in lattice.reduction_offsets:
        np.minimum(best, np.linalg.norm(u0 - offset, axis=1), out=best)
    return best


def fundamental_coefficients(lattice: Lattice, points: FloatArray) -> FloatArray:
    """Coefficients of points in [0, 1)ⁿ relative to mB.

    Coefficients within the structural tolerance of an integer are snapped to
    it first, so exact lattice translates reduce to exact representatives.

    Args:
    ----
        lattice (Lattice): The lattice.
        points (FloatArray): Points of shape (count, n).

    Returns:
    -------
        FloatArray: Coefficients in [0, 1).

    """
    coeffs = points @ np.asarray(lattice.scaled_inverse).T
    nearest = np.round(coeffs)
    snap = np.abs(coeffs - nearest) < DEFAULTS.structural_tol
    coeffs = np.where(snap, nearest, coeffs)
    frac = coeffs - np.floor(coeffs)
    return np.where(frac >= 1.0, frac - 1.0, frac)


def reduce_to_fundamental(lattice: Lattice, x: PointLike | float) -> FloatArray:
    """Representative of x + Λ_m in the fundamental parallelepiped.

    Args:
    ----
        lattice (Lattice): The lattice.
        x (PointLike | float): Finite point.

    Returns:
    -------
        FloatArray: y with y - x in Λ_m and (mB)⁻¹y in [0, 1)ⁿ.

    """
    point = _as_point(x, lattice.n)
    frac = fundamental_coefficients(lattice, point[None, :])[0]
    return lattice.scaled_basis @ frac


def in_lattice(
    lattice: Lattice, v: PointLike | float, tol: float = DEFAULTS.derived_tol
) -> bool:
    """Whether v is a point of Λ_m, up to ``tol`` in coefficient space."""
    coeffs = lattice.scaled_inverse @ _as_point(v, lattice.n)
    return bool(np.all(np.abs(coeffs - np.round(coeffs)) <= tol))


def lattice_to_dict(lattice: Lattice) -> dict[str, Any]:
    """JSON lattice document ``{"n", "m", "basis"}`` with basis vectors as rows."""
    return {
        "n": lattice.n,
        "m": lattice.m,
        "basis": [[float(v) for v in col] for col in lattice.basis.T],
    }


def lattice_from_dict(doc: Any) -> Lattice:
    """Parse a JSON lattice document.

    Args:
    ----
        doc (Any): Parsed JSON object.

    Returns:
    -------
        Lattice: The described lattice.

    Raises:
    ------
        DocumentFormatError: If keys are missing or inconsistent.

    """
    try:
        n = int(doc["n"])
        m = int(doc["m"])
        basis = [[float(v) for v in vec] for vec in doc["basis"]]
    except (KeyError, TypeError, ValueError) as err:
        raise DocumentFormatError(f"Malformed lattice document: {err}") from err
    if len(basis) != n or any(len(vec) != n for vec in basis):
        raise DocumentFormatError(f"Lattice document basis does not match n = {n}.")
    return make_lattice(basis, m)
