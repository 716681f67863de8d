"""The hexagonal auxiliary function g_2 on Λ_2 = 2·(hexagonal lattice).

g_2(x) = 1 + cos(a_1·x) + cos(a_2·x) + cos(a_3·x) with a_1 = (π, -π/√3),
a_2 = (0, 2π/√3) and a_3 = a_1 + a_2. Under x̃ = Ax with
A = [[1, -1/√3], [0, 2/√3]] it becomes f(x̃) = 1 + cos πx̃_1 + cos πx̃_2
+ cos π(x̃_1 + x̃_2) = 4 cos(πx̃_1/2) cos(πx̃_2/2) cos(π(x̃_1 + x̃_2)/2).
"""

import math
from dataclasses import dataclass

import numpy as np

from spherelp._types import FloatArray, NotInRegionError, PointLike
from spherelp.auxfn import CosineSeries, make_series
from spherelp.config import DEFAULTS
from spherelp.lattice import hexagonal_lattice, quotient_norm

SQRT3 = math.sqrt(3.0)
AFFINE_MAP = np.array([[1.0, -1.0 / SQRT3], [0.0, 2.0 / SQRT3]])
V1 = np.array([1.0, 0.0])
V2 = np.array([0.5, SQRT3 / 2])


def hex_frequencies() -> FloatArray:
    """Frequencies a_k/(2π) of g_2, the zero frequency first."""
    a1 = np.array([math.pi, -math.pi / SQRT3])
    a2 = np.array([0.0, 2.0 * math.pi / SQRT3])
    return np.vstack([np.zeros(2), a1, a2, a1 + a2]) / (2.0 * math.pi)


def hex_g2() -> CosineSeries:
    """g_2 on the hexagonal lattice scaled by 2, all coefficients 1."""
    return make_series(hexagonal_lattice(2), [(t, 1.0) for t in hex_frequencies()])


def cosine_product_identity(x: float, y: float) -> tuple[float, float]:
    """Four-term sum f(x, y) and its cosine-product factorisation.

    Args:
    ----
        x (float): First coordinate.
        y (float): Second coordinate.

    Returns:
    -------
        tuple[float, float]: ``1 + cos πx + cos πy + cos π(x+y)`` and
        ``4 cos(πx/2) cos(πy/2) cos(π(x+y)/2)``.

    """
    value = (
        1.0
        + math.cos(math.pi * x)
        + math.cos(math.pi * y)
        + math.cos(math.pi * (x + y))
    )
    factored = (
        4.0
        * math.cos(math.pi * x / 2)
        * math.cos(math.pi * y / 2)
        * math.cos(math.pi * (x + y) / 2)
    )
    return value, factored


lemma_f = cosine_product_identity


@dataclass(frozen=True)
class SignCertificate:
    """Exact-sign evaluation of g_2 at a region point.

    Attributes
    ----------
        sign (int): -1, 0 or 1.
        value (float): Factored value f(x̃).
        reduced (FloatArray): x̃ = Ax reduced modulo 2ℤ² into [-1, 1)².

    """

    sign: int
    value: float
    reduced: FloatArray


def exact_region_sign_2d(
    x: PointLike, zero_tol: float = DEFAULTS.structural_tol
) -> SignCertificate:
    """Sign of g_2 at x through the cosine-product factorisation.

    x̃ = Ax is reduced modulo 2ℤ² into [-1, 1)², then the product
    4 cos(πx̃_1/2) cos(πx̃_2/2) cos(π(x̃_1 + x̃_2)/2) is evaluated; no
    cancellation between terms occurs.

    Args:
    ----
        x (PointLike): Point in ℝ² with quotient norm at least 1.
        zero_tol (float): Magnitude below which the sign is reported as 0.

    Returns:
    -------
        SignCertificate: Sign, factored value and reduced point.

    Raises:
    ------
        NotInRegionError: If the quotient norm of x with respect to Λ_2 is below 1.

    """
    point = np.asarray(x, dtype=np.float64)
    q = quotient_norm(hexagonal_lattice(2), point).value
    if q < 1.0 - DEFAULTS.structural_tol:
        raise NotInRegionError(f"Point {point} has quotient norm {q:.6f} < 1.")
    mapped = AFFINE_MAP @ point
    reduced = mapped - 2.0 * np.floor(mapped / 2.0 + 0.5)
    _, value = cosine_product_identity(float(reduced[0]), float(reduced[1]))
    sign = 0 if abs(value) <= zero_tol else int(math.copysign(1.0, value))
    return SignCertificate(sign=sign, value=value, reduced=reduced)


def kissing_points_2d() -> FloatArray:
    """The six quotient-norm-1 zeros ±v_1, ±v_2, ±(v_1 - v_2)."""
    base = np.vstack([V1, V2, V1 - V2])
    return np.vstack([base, -base])


def hex_witness() -> FloatArray:
    """Centres 0, v_1, v_2, v_1 + v_2: four unit-distance spheres per cell of Λ_2."""
    return np.vstack([np.zeros(2), V1, V2, V1 + V2])
