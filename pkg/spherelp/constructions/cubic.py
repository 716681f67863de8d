"""The cubic auxiliary function on √2ℤ³.

g(x) = 1 + cos(a_1·x) + cos(a_2·x) + cos(a_3·x) with a_i = √2π e_i. With
u = √2πx reduced to [-π, π]³ the region ‖[x]‖ >= 1 is ‖u‖₂ >= √2π, and on it
‖u‖₁ >= 2π, which forces g <= 0.
"""

import logging
import math
from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from spherelp._types import FloatArray
from spherelp.auxfn import CosineSeries, make_series
from spherelp.lattice import cubic_sqrt2_lattice

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)


def cubic_frequencies() -> FloatArray:
    """Frequencies a_k/(2π) = e_k/√2, the zero frequency first."""
    return np.vstack([np.zeros(3), np.eye(3) / SQRT2])


def cubic_g3() -> CosineSeries:
    """The cubic function on √2ℤ³ with m = 1, all coefficients 1."""
    return make_series(cubic_sqrt2_lattice(1), [(t, 1.0) for t in cubic_frequencies()])


def kissing_points_3d() -> FloatArray:
    """The twelve points (±√2/2, ±√2/2, 0) and their permutations."""
    half = SQRT2 / 2
    points: set[tuple[float, float, float]] = set()
    for sx, sy in product((-half, half), repeat=2):
        for perm in permutations((sx, sy, 0.0)):
            points.add(perm)
    return np.array(sorted(points))


def cubic_witness() -> FloatArray:
    """Face-centred cubic centres in one cell of √2ℤ³."""
    half = SQRT2 / 2
    return np.array(
        [[0.0, 0.0, 0.0], [half, half, 0.0], [half, 0.0, half], [0.0, half, half]]
    )


def l1_hull_vertices() -> FloatArray:
    """Vertices 0, π·e_i and π(e_i + e_j) of the region bounded by ‖u‖₁ <= 2π."""
    pi = math.pi
    return np.array(
        [
            [0.0, 0.0, 0.0],
            [pi, 0.0, 0.0],
            [0.0, pi, 0.0],
            [0.0, 0.0, pi],
            [pi, pi, 0.0],
            [pi, 0.0, pi],
            [0.0, pi, pi],
        ]
    )


@dataclass(frozen=True)
class L1InclusionResult:
    """Monte-Carlo check that ‖u‖₂ > √2π implies ‖u‖₁ > 2π on [0, π]³.

    Attributes
    ----------
        max_violation (float): Largest 2π - ‖u‖₁ over accepted samples; -inf when
            no sample was accepted.
        accepted (int): Samples with ‖u‖₂ > √2π.
        vertices_ok (bool): Whether every hull vertex has ‖u_i‖₂ <= √2π.
        vertex_norms (FloatArray): Euclidean norms of the hull vertices.

    """

    max_violation: float
    accepted: int
    vertices_ok: bool
    vertex_norms: FloatArray


def l1_region_inclusion_check(
    samples: int, seed: int | None = 0, batch: int = 1 << 20
) -> L1InclusionResult:
    """Sample u in [0, π]³ and report the worst violation of ‖u‖₁ > 2π.

    Args:
    ----
        samples (int): Number of uniform samples, at least 1.
        seed (int | None): Seed of the random generator.
        batch (int): Samples drawn per batch.

    Returns:
    -------
        L1InclusionResult: Worst violation and the vertex check.

    """
    if samples < 1:
        raise ValueError(f"Need at least one sample, got {samples}.")
    rng = np.random.default_rng(seed)
    radius = SQRT2 * math.pi
    worst = -math.inf
    accepted = 0
    remaining = samples
    while remaining > 0:
        size = min(batch, remaining)
        u = rng.uniform(0.0, math.pi, size=(size, 3))
        outside = np.linalg.norm(u, axis=1) > radius
        accepted += int(np.count_nonzero(outside))
        if np.any(outside):
            excess = 2.0 * math.pi - np.sum(u[outside], axis=1)
            worst = max(worst, float(np.max(excess)))
        remaining -= size
    vertex_norms = np.linalg.norm(l1_hull_vertices(), axis=1)
    vertices_ok = bool(np.all(vertex_norms <= radius * (1.0 + 1e-15)))
    logger.debug("l1 inclusion: %d of %d samples outside the ball", accepted, samples)
    return L1InclusionResult(
        max_violation=worst,
        accepted=accepted,
        vertices_ok=vertices_ok,
        vertex_norms=vertex_norms,
    )
