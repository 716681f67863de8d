"""Finite cosine series over dual-lattice frequencies.

A series g(x) = Σ_t c_t cos(2π t·x) stores one representative of every ± pair
of frequencies, and its coefficient is the combined weight of the pair. The
zero frequency appears exactly once.
"""

import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from functools import partial
from typing import Any

import numpy as np
import pandas as pd

from spherelp._types import (
    DimensionMismatchError,
    DocumentFormatError,
    FloatArray,
    InvalidSeriesError,
    PointLike,
    VNotInLatticeError,
)
from spherelp.config import DEFAULTS
from spherelp.lattice import (
    Lattice,
    in_lattice,
    lattice_from_dict,
    lattice_to_dict,
)

TWO_PI = 2.0 * math.pi
# rows * terms per evaluation block
_BLOCK_ENTRIES = 1 << 22


@dataclass(frozen=True, eq=False)
class CosineSeries:
    """Λ_m-periodic even function given by finitely many cosine terms.

    Attributes
    ----------
        lattice (Lattice): Lattice Λ_m; frequencies live in its dual.
        frequencies (FloatArray): Frequencies t of shape (terms, n).
        coefficients (FloatArray): Nonnegative coefficients c_t of shape (terms,).
        closed_form (Callable[[FloatArray], FloatArray] | None): Optional evaluator
            of the same function on points of shape (count, n). It replaces the
            cosine sum in evaluation where summation would cancel badly.

    Raises
    ------
        InvalidSeriesError: If a coefficient is negative, the zero frequency is
            missing or repeated, c_0 <= 0, or two stored frequencies coincide up to
            sign.

    """

    lattice: Lattice
    frequencies: FloatArray
    coefficients: FloatArray
    closed_form: Callable[[FloatArray], FloatArray] | None = None

    def __post_init__(self) -> None:
        """Validate the structural invariants and freeze the arrays."""
        freqs = np.array(self.frequencies, dtype=np.float64, ndmin=2)
        coeffs = np.array(self.coefficients, dtype=np.float64).ravel()
        n = self.lattice.n
        if freqs.shape != (len(coeffs), n):
            raise DimensionMismatchError(
                f"Frequencies of shape {freqs.shape} do not match {len(coeffs)} "
                f"coefficients in dimension {n}."
            )
        if not (np.all(np.isfinite(freqs)) and np.all(np.isfinite(coeffs))):
            raise InvalidSeriesError("Frequencies and coefficients must be finite.")
        if np.any(coeffs < 0):
            raise InvalidSeriesError("Cosine coefficients must be nonnegative.")
        zero = np.flatnonzero(np.all(np.abs(freqs) <= DEFAULTS.structural_tol, axis=1))
        if len(zero) != 1:
            raise InvalidSeriesError(
                f"Expected exactly one zero frequency, found {len(zero)}."
            )
        if coeffs[zero[0]] <= 0:
            raise InvalidSeriesError("The constant coefficient c_0 must be positive.")
        keys = _pair_keys(freqs, self.lattice)
        if len(np.unique(keys, axis=0)) != len(keys):
            raise InvalidSeriesError("Frequencies must be distinct modulo sign.")
        freqs.setflags(write=False)
        coeffs.setflags(write=False)
        object.__setattr__(self, "frequencies", freqs)
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def n(self) -> int:
        """Dimension."""
        return self.lattice.n

    @property
    def zero_index(self) -> int:
        """Index of the zero frequency."""
        is_zero = np.all(np.abs(self.frequencies) <= DEFAULTS.structural_tol, axis=1)
        return int(np.flatnonzero(is_zero)[0])

    @property
    def c0(self) -> float:
        """Constant coefficient c_0."""
        return float(self.coefficients[self.zero_index])

    @property
    def value_at_zero(self) -> float:
        """g(0) = Σ c_t."""
        return float(np.sum(self.coefficients))


def _pair_keys(freqs: FloatArray, lattice: Lattice) -> FloatArray:
    """Sign-normalised integer keys identifying t and -t."""
    # dual coordinates are integers for members; other inputs still get stable keys
    coords = np.round(freqs @ np.asarray(lattice.scaled_basis) * 1e6)
    first = np.argmax(coords != 0, axis=1)
    signs = np.sign(coords[np.arange(len(coords)), first])
    signs[signs == 0] = 1.0
    return coords * signs[:, None]


def make_series(
    lattice: Lattice, terms: Iterable[tuple[PointLike | float, float]]
) -> CosineSeries:
    """Build a series from ``(frequency, coefficient)`` pairs.

    Args:
    ----
        lattice (Lattice): The lattice Λ_m.
        terms (Iterable[tuple[PointLike | float, float]]): Frequency and combined
            coefficient of each term.

    Returns:
    -------
        CosineSeries: The validated series.

    """
    term_list = list(terms)
    freqs = np.array(
        [np.atleast_1d(np.asarray(t, dtype=np.float64)) for t, _ in term_list]
    )
    coeffs = np.array([float(c) for _, c in term_list])
    freqs = freqs.reshape(len(term_list), lattice.n)
    return CosineSeries(lattice=lattice, frequencies=freqs, coefficients=coeffs)


def _points(s: CosineSeries, points: PointLike | FloatArray) -> FloatArray:
    arr = np.asarray(points, dtype=np.float64)
    if s.n == 1 and arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.shape[1] != s.n:
        raise DimensionMismatchError(
            f"Expected points of dimension {s.n}, got {arr.shape}."
        )
    return arr


def _blocks(rows: int, terms: int) -> Iterable[slice]:
    step = max(1, _BLOCK_ENTRIES // max(terms, 1))
    for start in range(0, rows, step):
        yield slice(start, min(start + step, rows))


def evaluate_many(s: CosineSeries, points: PointLike | FloatArray) -> FloatArray:
    """Evaluate the series at many points.

    Uses the closed form of the series when it has one, the cosine sum
    otherwise.

    Args:
    ----
        s (CosineSeries): The series.
        points (PointLike | FloatArray): Points of shape (count, n); a flat array
            in one dimension.

    Returns:
    -------
        FloatArray: Values of shape (count,).

    """
    pts = _points(s, points)
    if s.closed_form is not None:
        return np.asarray(s.closed_form(pts), dtype=np.float64).reshape(len(pts))
    return cosine_sum(s, pts)


def cosine_sum(s: CosineSeries, points: PointLike | FloatArray) -> FloatArray:
    """Σ_t c_t cos(2π t·x) at many points, ignoring any closed form.

    The absolute rounding error is of order eps·g(0).
    """
    pts = _points(s, points)
    out = np.empty(len(pts))
    freqs_t = TWO_PI * s.frequencies.T
    for block in _blocks(len(pts), len(s.coefficients)):
        out[block] = np.cos(pts[block] @ freqs_t) @ s.coefficients
    return out


def evaluate(s: CosineSeries, x: PointLike | float) -> float:
    """Value g(x) = Σ_t c_t cos(2π t·x).

    Each stored frequency is counted once; its coefficient already holds the
    ± pair total.

    Args:
    ----
        s (CosineSeries): The series.
        x (PointLike | float): Point of dimension n.

    Returns:
    -------
        float: g(x).

    """
    point = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if point.shape != (s.n,):
        raise DimensionMismatchError(
            f"Expected a point of dimension {s.n}, got {point.shape}."
        )
    return float(evaluate_many(s, point[None, :])[0])


def gradient_many(s: CosineSeries, points: PointLike | FloatArray) -> FloatArray:
    """Gradients -Σ c_t 2πt sin(2π t·x) at many points, shape (count, n)."""
    pts = _points(s, points)
    out = np.empty_like(pts)
    freqs_t = TWO_PI * s.frequencies.T
    weighted = -(TWO_PI * s.frequencies) * s.coefficients[:, None]
    for block in _blocks(len(pts), len(s.coefficients)):
        out[block] = np.sin(pts[block] @ freqs_t) @ weighted
    return out


def gradient(s: CosineSeries, x: PointLike | float) -> FloatArray:
    """Gradient of the series at one point."""
    point = np.atleast_1d(np.asarray(x, dtype=np.float64))
    return gradient_many(s, point[None, :])[0]


def hat_zero(s: CosineSeries) -> float:
    """Fourier transform at 0 of the periodic function, ĝ(0) = c_0|Λ_m|."""
    return s.c0 * s.lattice.determinant


def sharp(s: CosineSeries) -> float:
    """Sharp ratio g(0)/ĝ(0)."""
    return s.value_at_zero / hat_zero(s)


def lipschitz_constant(s: CosineSeries) -> float:
    """Global Lipschitz constant Σ_t c_t·2π‖t‖₂ of the series."""
    norms = np.linalg.norm(s.frequencies, axis=1)
    return float(np.sum(s.coefficients * TWO_PI * norms))


def curvature_constant(s: CosineSeries) -> float:
    """Bound Σ_t c_t(2π‖t‖₂)² on the operator norm of the Hessian."""
    norms = np.linalg.norm(s.frequencies, axis=1)
    return float(np.sum(s.coefficients * (TWO_PI * norms) ** 2))


@dataclass(frozen=True)
class DualMembership:
    """Outcome of the dual-lattice membership check.

    Attributes
    ----------
        ok (bool): Whether every frequency is a dual-lattice vector.
        residuals (FloatArray): Per frequency, the largest distance of an inner
            product ⟨t, (mB)e_i⟩ from the nearest integer.

    """

    ok: bool
    residuals: FloatArray

    def __bool__(self) -> bool:
        """Truth value of the check."""
        return self.ok


def verify_dual_membership(
    s: CosineSeries, tol: float = DEFAULTS.derived_tol
) -> DualMembership:
    """Check that every frequency has integer products with the basis of Λ_m.

    Args:
    ----
        s (CosineSeries): The series.
        tol (float): Allowed distance from an integer.

    Returns:
    -------
        DualMembership: Verdict with per-frequency residuals.

    """
    products = s.frequencies @ np.asarray(s.lattice.scaled_basis)
    residuals = np.max(np.abs(products - np.round(products)), axis=1)
    return DualMembership(ok=bool(np.all(residuals <= tol)), residuals=residuals)


def periodicity_residual(
    s: CosineSeries, x: PointLike | float, v: PointLike | float
) -> float:
    """|g(x) - g(x + v)| for a lattice vector v.

    Args:
    ----
        s (CosineSeries): The series.
        x (PointLike | float): Base point.
        v (PointLike | float): Shift, which must lie in Λ_m.

    Returns:
    -------
        float: Absolute difference of the two values.

    Raises:
    ------
        VNotInLatticeError: If v is not in Λ_m within 1e-9.

    """
    if not in_lattice(s.lattice, v):
        raise VNotInLatticeError(f"Shift {v} is not a vector of the lattice.")
    point = np.atleast_1d(np.asarray(x, dtype=np.float64))
    shift = np.atleast_1d(np.asarray(v, dtype=np.float64))
    return abs(evaluate(s, point) - evaluate(s, point + shift))


def cell_integral(
    s: CosineSeries,
    points_per_axis: int = 8,
    rel_tol: float = 1e-6,
    max_refinements: int = 8,
) -> float:
    """Integral of the series over the fundamental parallelepiped.

    Uses the tensor midpoint rule in coefficient space, doubling the number of
    points per axis until two estimates agree to ``rel_tol``.

    Args:
    ----
        s (CosineSeries): The series.
        points_per_axis (int): Initial number of midpoints per axis.
        rel_tol (float): Relative agreement between successive estimates.
        max_refinements (int): Maximum number of doublings.

    Returns:
    -------
        float: The integral, which equals ĝ(0) for a valid series.

    """
    volume = s.lattice.determinant
    previous = _midpoint_integral(s, points_per_axis) * volume
    count = points_per_axis
    for _ in range(max_refinements):
        count *= 2
        current = _midpoint_integral(s, count) * volume
        if abs(current - previous) <= rel_tol * max(abs(current), 1.0):
            return current
        previous = current
    return previous


def _midpoint_integral(s: CosineSeries, count: int) -> float:
    axis = (np.arange(count) + 0.5) / count
    mesh = np.meshgrid(*([axis] * s.n), indexing="ij")
    coeffs = np.stack(mesh, axis=-1).reshape(-1, s.n)
    points = coeffs @ np.asarray(s.lattice.scaled_basis).T
    return float(np.mean(evaluate_many(s, points)))


def scaled(s: CosineSeries, alpha: float) -> CosineSeries:
    """The series α·g for α > 0."""
    if not alpha > 0:
        raise ValueError(f"Scale factor must be positive, got {alpha}.")
    closed_form = None
    if s.closed_form is not None:
        closed_form = partial(_scaled_closed_form, s.closed_form, alpha)
    return CosineSeries(
        s.lattice, s.frequencies.copy(), alpha * s.coefficients, closed_form
    )


def _scaled_closed_form(
    base: Callable[[FloatArray], FloatArray], alpha: float, points: FloatArray
) -> FloatArray:
    return alpha * base(points)


def series_to_dict(s: CosineSeries) -> dict[str, Any]:
    """JSON series document ``{"lattice", "terms": [{"t", "c"}]}``."""
    return {
        "lattice": lattice_to_dict(s.lattice),
        "terms": [
            {"t": [float(v) for v in t], "c": float(c)}
            for t, c in zip(s.frequencies, s.coefficients, strict=True)
        ],
    }


def series_from_dict(doc: Any) -> CosineSeries:
    """Parse a JSON series document.

    Raises
    ------
        DocumentFormatError: If the document structure is wrong.

    """
    try:
        lattice = lattice_from_dict(doc["lattice"])
        terms = [
            ([float(v) for v in term["t"]], float(term["c"])) for term in doc["terms"]
        ]
    except (KeyError, TypeError, ValueError) as err:
        if isinstance(err, DocumentFormatError):
            raise
        raise DocumentFormatError(f"Malformed series document: {err}") from err
    if not terms or any(len(t) != lattice.n for t, _ in terms):
        raise DocumentFormatError(
            "Series terms must be nonempty and match the lattice dimension."
        )
    return make_series(lattice, terms)


def sample_dump(s: CosineSeries, points: PointLike | FloatArray) -> pd.DataFrame:
    """Table with columns ``x_1..x_n, value`` for plotting.

    Args:
    ----
        s (CosineSeries): The series.
        points (PointLike | FloatArray): Sample points.

    Returns:
    -------
        pd.DataFrame: One row per point.

    """
    pts = _points(s, points)
    frame = pd.DataFrame(pts, columns=[f"x_{i + 1}" for i in range(s.n)])
    frame["value"] = evaluate_many(s, pts)
    return frame

