"""Discretised search problems: a frequency set and finitely many region points."""

import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from spherelp._types import (
    DimensionMismatchError,
    DocumentFormatError,
    EmptyFrequencySetError,
    FloatArray,
    GridTooFineError,
    IntArray,
    InvalidSeriesError,
    LpStatus,
)
from spherelp.config import DEFAULTS
from spherelp.lattice import (
    Lattice,
    dual_lattice,
    enumerate_coefficients,
    lattice_from_dict,
    lattice_to_dict,
    quotient_norms,
    shortest_vector_norm,
)
from spherelp.utils.linalg_utils import integer_box

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
# region points may sit this far inside the unit quotient-norm sphere
REGION_SLACK = 1e-12
AUTO_RADIUS_FACTOR = 1.05


@dataclass(frozen=True, eq=False)
class SearchProblem:
    """Frequencies S and constraint points X of a discretised search.

    Attributes
    ----------
        lattice (Lattice): Period lattice Λ_m.
        frequencies (FloatArray): One representative per ± pair, zero first,
            shape (|S|, n).
        points (FloatArray): Fundamental-domain points with quotient norm >= 1,
            shape (|X|, n).
        row_weights (FloatArray | None): Positive weights multiplying the
            constraint rows; None means all ones.
        max_freq (float | None): Frequency radius R the set was built from.
        grid_spacing (float | None): Spacing h of the initial constraint grid.

    Raises
    ------
        InvalidSeriesError: If the zero frequency is not first or a frequency is
            not in the dual lattice.
        ValueError: If a point lies inside the unit quotient-norm ball or a
            weight is not positive.

    """

    lattice: Lattice
    frequencies: FloatArray
    points: FloatArray
    row_weights: FloatArray | None = None
    max_freq: float | None = None
    grid_spacing: float | None = None

    def __post_init__(self) -> None:
        """Validate and freeze the arrays."""
        n = self.lattice.n
        freqs = np.array(self.frequencies, dtype=np.float64, ndmin=2)
        points = np.array(self.points, dtype=np.float64).reshape(-1, n)
        if freqs.shape[1] != n:
            raise DimensionMismatchError(
                f"Frequencies of shape {freqs.shape} do not match dimension {n}."
            )
        if not np.all(np.abs(freqs[0]) <= DEFAULTS.structural_tol):
            raise InvalidSeriesError("The first frequency must be zero.")
        coords = freqs @ np.asarray(self.lattice.scaled_basis)
        if np.any(np.abs(coords - np.round(coords)) > DEFAULTS.derived_tol):
            raise InvalidSeriesError("Frequencies must lie in the dual lattice.")
        pairs = canonical_sign(np.round(coords).astype(np.int64))
        if len(np.unique(pairs, axis=0)) != len(pairs):
            raise InvalidSeriesError("Frequencies must be distinct modulo sign.")
        if len(points) > 0:
            norms = quotient_norms(self.lattice, points)
            if float(np.min(norms)) < 1.0 - REGION_SLACK:
                raise ValueError(
                    f"Constraint point with quotient norm {np.min(norms):.6f} < 1."
                )
        freqs.setflags(write=False)
        points.setflags(write=False)
        object.__setattr__(self, "frequencies", freqs)
        object.__setattr__(self, "points", points)
        if self.row_weights is not None:
            weights = np.array(self.row_weights, dtype=np.float64).ravel()
            if weights.shape != (len(points),) or np.any(weights <= 0):
                raise ValueError("Row weights must be positive, one per point.")
            weights.setflags(write=False)
            object.__setattr__(self, "row_weights", weights)

    @property
    def weights(self) -> FloatArray:
        """Row weights, ones when unset."""
        if self.row_weights is None:
            return np.ones(len(self.points))
        return self.row_weights

    def cosine_matrix(self) -> FloatArray:
        """Matrix A with A_jt = cos(2π t·x_j), shape (|X|, |S|)."""
        return np.cos(TWO_PI * (self.points @ self.frequencies.T))

    def with_points(self, extra: FloatArray) -> "SearchProblem":
        """Copy with more constraint points; added rows get weight 1.

        Args:
        ----
            extra (FloatArray): Points of shape (k, n).

        Returns:
        -------
            SearchProblem: The extended problem.

        """
        added = np.array(extra, dtype=np.float64).reshape(-1, self.lattice.n)
        weights = None
        if self.row_weights is not None:
            weights = np.concatenate([self.row_weights, np.ones(len(added))])
        return SearchProblem(
            self.lattice,
            self.frequencies,
            np.vstack([self.points, added]),
            weights,
            self.max_freq,
            self.grid_spacing,
        )


@dataclass(frozen=True)
class LpSolution:
    """Solution of a search problem.

    Attributes
    ----------
        status (LpStatus): Solver outcome.
        coefficients (FloatArray | None): c_t aligned with the problem
            frequencies, c_0 = 1; None unless optimal.
        objective (float): Σ c_t = g(0); inf when infeasible, nan on other failures.
        iterations (int): Simplex pivots.
        formulation (str): ``dual`` or ``primal``.

    """

    status: LpStatus
    coefficients: FloatArray | None
    objective: float
    iterations: int
    formulation: str = "dual"


def canonical_sign(coeffs: IntArray) -> IntArray:
    """Flip integer vectors so their first nonzero entry is positive."""
    first = np.argmax(coeffs != 0, axis=1)
    signs = np.sign(coeffs[np.arange(len(coeffs)), first])
    signs[signs == 0] = 1
    return coeffs * signs[:, None]


def frequency_set(lattice: Lattice, radius: float) -> FloatArray:
    """Dual-lattice points with ‖t‖ <= radius, one per ± pair, zero first.

    Frequencies are ordered by norm, then by their integer dual coordinates.

    Args:
    ----
        lattice (Lattice): Period lattice Λ_m.
        radius (float): Positive frequency radius R.

    Returns:
    -------
        FloatArray: Frequencies of shape (|S|, n).

    Raises:
    ------
        EmptyFrequencySetError: If no nonzero dual point lies within the radius.

    """
    if not radius > 0:
        raise ValueError(f"Frequency radius must be positive, got {radius}.")
    dual = dual_lattice(lattice)
    coeffs, _ = enumerate_coefficients(dual, np.zeros(lattice.n), radius)
    coeffs = np.unique(canonical_sign(coeffs), axis=0)
    points = coeffs.astype(np.float64) @ np.asarray(dual.scaled_basis).T
    norms = np.linalg.norm(points, axis=1)
    keys = [
        (round(float(r), 12), tuple(int(v) for v in k))
        for r, k in zip(norms, coeffs, strict=True)
    ]
    order = sorted(range(len(keys)), key=keys.__getitem__)
    freqs = points[order]
    if len(freqs) < 2:
        raise EmptyFrequencySetError(
            f"No nonzero dual-lattice frequency has norm <= {radius}."
        )
    return freqs


def auto_radius(lattice: Lattice) -> float:
    """Frequency radius 1.05 times the shortest dual vector."""
    return AUTO_RADIUS_FACTOR * shortest_vector_norm(lattice, dual=True)


def constraint_grid(
    lattice: Lattice, h: float, sample_cap: int = DEFAULTS.sample_cap
) -> FloatArray:
    """Vertex-grid points of the fundamental cell with quotient norm >= 1.

    The grid has N_i = m·ceil(‖mv_i‖/(m·h)) steps along each scaled basis
    vector, so it contains every point of the base lattice Λ and steps are at
    most h long.

    Args:
    ----
        lattice (Lattice): Period lattice Λ_m.
        h (float): Positive spacing.
        sample_cap (int): Maximum number of grid vertices.

    Returns:
    -------
        FloatArray: Region points of shape (count, n).

    Raises:
    ------
        GridTooFineError: If the grid exceeds ``sample_cap`` vertices.

    """
    if not h > 0:
        raise ValueError(f"Grid spacing must be positive, got {h}.")
    m = lattice.m
    lengths = np.linalg.norm(np.asarray(lattice.scaled_basis), axis=0)
    counts = m * np.ceil(lengths / (m * h)).astype(np.int64)
    total = math.prod(int(c) for c in counts)
    if total > sample_cap:
        raise GridTooFineError(
            f"Constraint grid needs {total} points (cap {sample_cap})."
        )
    steps = integer_box(np.zeros(lattice.n, dtype=np.int64), counts - 1)
    points = (steps / counts) @ np.asarray(lattice.scaled_basis).T
    keep = quotient_norms(lattice, points) >= 1.0 - REGION_SLACK
    return points[keep]


def build_problem(lattice: Lattice, radius: float, h: float) -> SearchProblem:
    """Search problem with frequencies up to ``radius`` and grid spacing ``h``.

    Args:
    ----
        lattice (Lattice): Period lattice Λ_m.
        radius (float): Frequency radius R.
        h (float): Constraint grid spacing.

    Returns:
    -------
        SearchProblem: The problem; an empty constraint set is logged as a warning.

    """
    freqs = frequency_set(lattice, radius)
    points = constraint_grid(lattice, h)
    if len(points) == 0:
        logger.warning("Constraint set is empty; c = e_0 solves the search.")
    logger.info(
        "search problem: %d frequencies, %d constraint points", len(freqs), len(points)
    )
    return SearchProblem(lattice, freqs, points, max_freq=radius, grid_spacing=h)


def problem_to_dict(p: SearchProblem) -> dict[str, Any]:
    """JSON problem document."""
    return {
        "lattice": lattice_to_dict(p.lattice),
        "max_freq": p.max_freq,
        "grid_spacing": p.grid_spacing,
        "frequencies": p.frequencies.tolist(),
        "points": p.points.tolist(),
        "row_weights": None if p.row_weights is None else p.row_weights.tolist(),
    }


def problem_from_dict(doc: Any) -> SearchProblem:
    """Parse a JSON problem document.

    Raises
    ------
        DocumentFormatError: If the document structure is wrong.

    """
    try:
        lattice = lattice_from_dict(doc["lattice"])
        freqs = np.array(doc["frequencies"], dtype=np.float64).reshape(-1, lattice.n)
        points = np.array(doc["points"], dtype=np.float64).reshape(-1, lattice.n)
        weights = doc.get("row_weights")
        max_freq = doc.get("max_freq")
        spacing = doc.get("grid_spacing")
    except (KeyError, TypeError, ValueError, AttributeError) as err:
        if isinstance(err, DocumentFormatError):
            raise
        raise DocumentFormatError(f"Malformed problem document: {err}") from err
    return SearchProblem(lattice, freqs, points, weights, max_freq, spacing)


def solution_to_dict(sol: LpSolution) -> dict[str, Any]:
    """JSON solution document."""
    return {
        "status": sol.status,
        "formulation": sol.formulation,
        "objective": sol.objective,
        "iterations": sol.iterations,
        "coefficients": None if sol.coefficients is None else sol.coefficients.tolist(),
    }
