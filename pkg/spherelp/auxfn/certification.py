"""Grid certificates of nonpositivity on the region ‖[x]‖ >= 1.

The fundamental parallelepiped is covered by cells of a coefficient-space grid
whose Euclidean covering radius r is at most the requested spacing h. Every
region point lies within r of a cell centre whose quotient norm is at least
1 - r, so only those centres are kept. On a cell of radius r around a centre x
the series is bounded by

    g(x) + min(L·r, ‖∇g(x)‖·r + K·r²/2)

with L the Lipschitz constant and K the Hessian bound of the series. The
certified bound is the maximum of this quantity over kept centres.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np

from spherelp._types import FloatArray, GridTooFineError, IntArray
from spherelp.auxfn.cosine_series import (
    CosineSeries,
    curvature_constant,
    evaluate_many,
    gradient_many,
    lipschitz_constant,
)
from spherelp.config import DEFAULTS
from spherelp.lattice import Lattice, quotient_norms
from spherelp.utils.linalg_utils import half_diagonals

logger = logging.getLogger(__name__)

_QUOTIENT_BLOCK = 4096


@dataclass(frozen=True)
class CertificationReport:
    """Outcome of a certified nonpositivity sweep.

    Attributes
    ----------
        threshold (float): Region is ‖[x]‖ >= threshold.
        grid_spacing (float): Requested spacing h.
        covering_radius (float): Actual cell covering radius r <= h.
        grid_shape (tuple[int, ...]): Cells per basis direction.
        lipschitz (float): Lipschitz constant L.
        curvature (float): Hessian bound K.
        max_value (float): Largest sampled value on kept centres.
        certified_bound (float): Upper bound of the series on the region.
        argmax (FloatArray | None): Kept centre with the largest sampled value.
        samples_evaluated (int): Number of grid cells visited.
        samples_screened (int): Cells that passed the cheap distance screen.
        tolerance (float): Acceptance tolerance.
        passed (bool): Whether ``certified_bound <= tolerance``.

    """

    threshold: float
    grid_spacing: float
    covering_radius: float
    grid_shape: tuple[int, ...]
    lipschitz: float
    curvature: float
    max_value: float
    certified_bound: float
    argmax: FloatArray | None
    samples_evaluated: int
    samples_screened: int
    tolerance: float
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        """Plain representation for JSON output."""
        return {
            "threshold": self.threshold,
            "grid_spacing": self.grid_spacing,
            "covering_radius": self.covering_radius,
            "grid_shape": list(self.grid_shape),
            "lipschitz": self.lipschitz,
            "curvature": self.curvature,
            "max_value": self.max_value,
            "certified_bound": self.certified_bound,
            "argmax": None if self.argmax is None else [float(v) for v in self.argmax],
            "samples_evaluated": self.samples_evaluated,
            "samples_screened": self.samples_screened,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class _ChunkResult:
    max_value: float
    argmax: FloatArray | None
    max_bound: float
    screened: int


def certification_grid(lattice: Lattice, h: float) -> tuple[IntArray, float]:
    """Cell counts per basis direction and the resulting covering radius.

    Args:
    ----
        lattice (Lattice): The lattice Λ_m.
        h (float): Required covering radius.

    Returns:
    -------
        tuple[IntArray, float]: Counts N_i and covering radius r <= h.

    """
    edges = np.asarray(lattice.scaled_basis)
    norms = np.linalg.norm(edges, axis=0)
    counts = np.ceil(math.sqrt(lattice.n) * norms / (2.0 * h)).astype(np.int64)
    counts = np.maximum(counts, 1)
    while True:
        radius = float(np.max(half_diagonals(edges / counts)))
        if radius <= h:
            return counts, radius
        grown = np.ceil(counts * radius / h).astype(np.int64)
        counts = np.maximum(grown, counts + 1)


def certify_nonpositive(
    s: CosineSeries,
    tol: float,
    h: float,
    *,
    threshold: float = 1.0,
    jobs: int = 1,
    chunk_size: int = DEFAULTS.chunk_size,
    sample_cap: int = DEFAULTS.sample_cap,
) -> CertificationReport:
    """Certify g <= tol on the region ‖[x]‖ >= threshold.

    Chunks of the grid are independent; with ``jobs > 1`` they run on a thread
    pool and are reduced in chunk order, the earliest maximum winning ties, so
    the report does not depend on ``jobs``.

    Args:
    ----
        s (CosineSeries): The series.
        tol (float): Nonnegative acceptance tolerance.
        h (float): Positive grid spacing (bound on the covering radius).
        threshold (float): Quotient-norm threshold of the region.
        jobs (int): Number of worker threads.
        chunk_size (int): Grid cells per chunk.
        sample_cap (int): Maximum number of grid cells.

    Returns:
    -------
        CertificationReport: The certificate.

    Raises:
    ------
        GridTooFineError: If the grid has more than ``sample_cap`` cells.
        ValueError: If ``h <= 0`` or ``tol < 0``.

    """
    if not h > 0:
        raise ValueError(f"Grid spacing must be positive, got {h}.")
    if not tol >= 0:
        raise ValueError(f"Tolerance must be nonnegative, got {tol}.")
    counts, radius = certification_grid(s.lattice, h)
    total = math.prod(int(c) for c in counts)
    if total > sample_cap:
        raise GridTooFineError(
            f"Grid spacing {h} needs {total:.3e} samples (cap {sample_cap})."
        )
    lipschitz = lipschitz_constant(s)
    curvature = curvature_constant(s)
    margin_cap = lipschitz * radius
    logger.debug(
        "certifying on grid %s (%d cells, r = %.3e, L = %.4f, K = %.4f)",
        tuple(int(c) for c in counts),
        total,
        radius,
        lipschitz,
        curvature,
    )

    def sweep(start: int) -> _ChunkResult:
        return _sweep_chunk(
            s,
            counts,
            start,
            min(start + chunk_size, total),
            radius,
            threshold,
            margin_cap,
            curvature,
        )

    starts = range(0, total, chunk_size)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(sweep, starts))
    else:
        results = [sweep(start) for start in starts]

    max_value = -math.inf
    max_bound = -math.inf
    argmax: FloatArray | None = None
    screened = 0
    for result in results:
        screened += result.screened
        if result.max_value > max_value:
            max_value = result.max_value
            argmax = result.argmax
        max_bound = max(max_bound, result.max_bound)

    if argmax is None:
        logger.warning(
            "No grid cell lies in the region; the certificate holds vacuously."
        )
    passed = max_bound <= tol
    logger.info(
        "certification %s: max sample %.3e, certified bound %.3e (tol %.1e)",
        "passed" if passed else "failed",
        max_value,
        max_bound,
        tol,
    )
    return CertificationReport(
        threshold=threshold,
        grid_spacing=h,
        covering_radius=radius,
        grid_shape=tuple(int(c) for c in counts),
        lipschitz=lipschitz,
        curvature=curvature,
        max_value=max_value,
        certified_bound=max_bound,
        argmax=argmax,
        samples_evaluated=total,
        samples_screened=screened,
        tolerance=tol,
        passed=passed,
    )


def _sweep_chunk(
    s: CosineSeries,
    counts: IntArray,
    start: int,
    stop: int,
    radius: float,
    threshold: float,
    margin_cap: float,
    curvature: float,
) -> _ChunkResult:
    edges_t = np.asarray(s.lattice.scaled_basis).T
    index = np.unravel_index(np.arange(start, stop), tuple(int(c) for c in counts))
    coeffs = (np.stack(index, axis=1) + 0.5) / counts
    # the rounded representative is never closer than the nearest one
    centred = np.linalg.norm((coeffs - np.round(coeffs)) @ edges_t, axis=1)
    screen = np.flatnonzero(centred >= threshold - radius)
    if len(screen) == 0:
        return _ChunkResult(-math.inf, None, -math.inf, 0)
    points = coeffs[screen] @ edges_t
    values = evaluate_many(s, points)
    grad_norms = np.linalg.norm(gradient_many(s, points), axis=1)
    margins = np.minimum(margin_cap, grad_norms * radius + 0.5 * curvature * radius**2)
    bounds = values + margins
    qnorms = np.full(len(points), np.nan)

    def best_kept(score: FloatArray) -> int | None:
        order = np.argsort(-score, kind="stable")
        for begin in range(0, len(order), _QUOTIENT_BLOCK):
            block = order[begin : begin + _QUOTIENT_BLOCK]
            todo = block[np.isnan(qnorms[block])]
            if len(todo) > 0:
                qnorms[todo] = quotient_norms(s.lattice, points[todo])
            hits = block[qnorms[block] >= threshold - radius]
            if len(hits) > 0:
                return int(hits[0])
        return None

    top_value = best_kept(values)
    if top_value is None:
        return _ChunkResult(-math.inf, None, -math.inf, len(screen))
    top_bound = best_kept(bounds)
    assert top_bound is not None
    return _ChunkResult(
        max_value=float(values[top_value]),
        argmax=points[top_value].copy(),
        max_bound=float(bounds[top_bound]),
        screened=len(screen),
    )
