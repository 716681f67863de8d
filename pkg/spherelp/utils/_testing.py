"""Slow reference implementations used as oracles in the test suite."""

import itertools
import math

import numpy as np

from spherelp._types import FloatArray
from spherelp.lattice import Lattice
from spherelp.lpsearch import SearchProblem


def brute_force_quotient_norm(
    lattice: Lattice, x: FloatArray, reach: int = 3
) -> float:
    """Distance from x to Λ_m over all coefficient vectors in a fixed box.

    Args:
    ----
        lattice (Lattice): The lattice.
        x (FloatArray): Point of dimension n.
        reach (int): Half width of the coefficient box around the rounded
            coefficients of x.

    Returns:
    -------
        float: min over the box of ‖x - (mB)k‖.

    """
    point = np.atleast_1d(np.asarray(x, dtype=np.float64))
    centre = np.round(lattice.scaled_inverse @ point).astype(int)
    best = math.inf
    for offset in itertools.product(range(-reach, reach + 1), repeat=lattice.n):
        k = centre + np.array(offset)
        best = min(best, float(np.linalg.norm(point - lattice.scaled_basis @ k)))
    return best


def brute_force_lp(p: SearchProblem, step: float, upper: float) -> float:
    """Minimum of Σ c_t over a grid of the free coefficients.

    Scans c_t in {0, step, ..., upper} for every nonzero frequency, with c_0 = 1,
    keeping points that satisfy every stored constraint.

    Args:
    ----
        p (SearchProblem): Problem with at most three free coefficients.
        step (float): Grid step.
        upper (float): Largest coefficient value scanned.

    Returns:
    -------
        float: Smallest feasible objective on the grid, inf if none.

    """
    free = len(p.frequencies) - 1
    if free > 3:
        raise ValueError(
            f"Brute force scan supports at most 3 free coefficients, got {free}."
        )
    axis = np.arange(0.0, upper + step / 2, step)
    mesh = np.meshgrid(*([axis] * free), indexing="ij")
    grid = np.stack([m.ravel() for m in mesh], axis=1)
    coeffs = np.hstack([np.ones((len(grid), 1)), grid])
    values = coeffs @ p.cosine_matrix().T
    # grid values carry rounding from the step arithmetic
    feasible = np.all(values <= 1e-9, axis=1)
    if not np.any(feasible):
        return math.inf
    return float(np.min(np.sum(coeffs[feasible], axis=1)))
