"""The one-dimensional family g_m, optimal for every m >= 3.

g_m(x) = Σ_{k=0}^{m-2} c_k cos(2πkx/m) with coefficients built from

    s_k = [(k+2)sin(2π/m) - sin(2(k+2)π/m)] / [(2 - 2cos(2π/m))·sin(2π/m)],

c_0 = s_{m-2} and c_k = 2·s_{m-2-k}. The same function has the closed form

    g_m(x) = (cos 2πx - 1) / (2(cos(2πx/m) - 1)(cos(2πx/m) - cos(2π/m))),

which is nonpositive for 1 <= |x| <= m/2.
"""

import logging
import math
from dataclasses import dataclass, replace
from functools import cache, partial

import numpy as np

from spherelp._types import FloatArray, MTooSmallError, PointLike
from spherelp.auxfn import CosineSeries, make_series
from spherelp.config import DEFAULTS
from spherelp.lattice import integer_lattice
from spherelp.utils.quadrature import integrate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OneDimCoefficients:
    """Cosine coefficients of g_m.

    Attributes
    ----------
        m (int): Period, at least 3.
        c (FloatArray): Coefficients c_0..c_{m-2}, all positive.

    """

    m: int
    c: FloatArray

    @property
    def value_at_zero(self) -> float:
        """Closed form of g_m(0) = m²/(2 - 2cos(2π/m))."""
        return self.m**2 / (2.0 - 2.0 * math.cos(2.0 * math.pi / self.m))


def _check_m(m: int) -> None:
    if m < 3:
        raise MTooSmallError(f"The one-dimensional construction needs m >= 3, got {m}.")


def s_coefficient(m: int, k: int) -> float:
    """The auxiliary coefficient s_k for period m.

    Args:
    ----
        m (int): Period, at least 3.
        k (int): Nonnegative index.

    Returns:
    -------
        float: s_k.

    """
    _check_m(m)
    if k < 0:
        raise ValueError(f"Index k must be nonnegative, got {k}.")
    theta = 2.0 * math.pi / m
    numerator = (k + 2) * math.sin(theta) - math.sin((k + 2) * theta)
    return numerator / ((2.0 - 2.0 * math.cos(theta)) * math.sin(theta))


def one_dim_coeffs(m: int) -> OneDimCoefficients:
    """Coefficients c_0 = s_{m-2}, c_k = 2·s_{m-2-k} of g_m.

    Args:
    ----
        m (int): Period, at least 3.

    Returns:
    -------
        OneDimCoefficients: The coefficients.

    Raises:
    ------
        MTooSmallError: If m < 3.

    """
    _check_m(m)
    c = np.array(
        [s_coefficient(m, m - 2)]
        + [2.0 * s_coefficient(m, m - 2 - k) for k in range(1, m - 1)]
    )
    return OneDimCoefficients(m=m, c=c)


@cache
def one_dim_series(m: int) -> CosineSeries:
    """g_m as a cosine series on mℤ with frequencies k/m.

    The series evaluates through :func:`one_dim_closed_form`, whose sign is
    exact near the double zeros at the integers.
    """
    coeffs = one_dim_coeffs(m)
    series = make_series(
        integer_lattice(1, m), [(k / m, float(c)) for k, c in enumerate(coeffs.c)]
    )
    return replace(series, closed_form=partial(_closed_form_rows, m))


def _closed_form_rows(m: int, points: FloatArray) -> FloatArray:
    return one_dim_closed_form(m, points[:, 0])


def one_dim_closed_form(m: int, x: float | PointLike) -> FloatArray:
    """Evaluate g_m through its closed form.

    The cosine differences are rewritten with cos a - cos b = -2 sin((a+b)/2)
    sin((a-b)/2), giving

        g_m(x) = -sin²(πx) / (4 sin²(πx/m) sin(π(x+1)/m) sin(π(x-1)/m)),

    evaluated at r = |x| reduced into [0, m/2]. The removable singularities are
    cancelled with sin(πd)/sin(πd/m) = m·sinc(d)/sinc(d/m): on r < 1/2 the
    factor sin²(πr)/sin²(πr/m) is rewritten, on 1/2 <= r < 3/2 the factor
    sin²(πr)/sin(π(r-1)/m). Every remaining denominator is bounded away from
    zero, so g_m <= 0 holds exactly in floating point for 1 <= r <= m/2.

    Args:
    ----
        m (int): Period, at least 3.
        x (float | PointLike): Point or flat array of points.

    Returns:
    -------
        FloatArray: Values with the shape of ``x``.

    """
    _check_m(m)
    xs = np.asarray(x, dtype=np.float64)
    flat = np.atleast_1d(xs).ravel()
    r = np.abs(flat - m * np.floor(flat / m + 0.5))
    out = np.empty_like(flat)
    pi = math.pi

    core = r < 0.5
    a = r[core]
    out[core] = -(m**2 * (np.sinc(a) / np.sinc(a / m)) ** 2) / (
        4.0 * np.sin(pi * (a + 1.0) / m) * np.sin(pi * (a - 1.0) / m)
    )

    shell = (r >= 0.5) & (r < 1.5)
    b = r[shell]
    d = b - 1.0
    out[shell] = -(np.sin(pi * d) * m * np.sinc(d) / np.sinc(d / m)) / (
        4.0 * np.sin(pi * b / m) ** 2 * np.sin(pi * (b + 1.0) / m)
    )

    outer = r >= 1.5
    c = r[outer]
    out[outer] = -(np.sin(pi * (c - np.round(c))) ** 2) / (
        4.0
        * np.sin(pi * c / m) ** 2
        * np.sin(pi * (c + 1.0) / m)
        * np.sin(pi * (c - 1.0) / m)
    )
    return out.reshape(xs.shape)


def fourier_coefficient_quadrature(
    m: int,
    l: int,  # noqa: E741
    tol: float = DEFAULTS.quadrature_tol,
    max_refinements: int = DEFAULTS.quadrature_max_refinements,
) -> float:
    """Cosine coefficient of g_m at frequency l/m, computed by quadrature.

    Integrates the closed form: (2/m)∫_{-m/2}^{m/2} g_m(x)cos(2πlx/m)dx, with
    factor 1/m for l = 0.

    Args:
    ----
        m (int): Period, at least 3.
        l (int): Nonnegative frequency index.
        tol (float): Agreement between successive panel doublings.
        max_refinements (int): Maximum number of doublings.

    Returns:
    -------
        float: The coefficient.

    Raises:
    ------
        QuadratureNotConvergedError: If the panels do not converge.

    """
    _check_m(m)
    if l < 0:
        raise ValueError(f"Frequency index must be nonnegative, got {l}.")

    def integrand(x: FloatArray) -> FloatArray:
        return one_dim_closed_form(m, x) * np.cos(2.0 * math.pi * l * x / m)

    result = integrate(
        integrand,
        -m / 2,
        m / 2,
        tol=tol,
        max_refinements=max_refinements,
        initial_panels=m,
    )
    factor = 1.0 / m if l == 0 else 2.0 / m
    logger.debug("coefficient m=%d l=%d from %d panels", m, l, result.panels)
    return factor * result.value


def one_dim_witness(m: int) -> FloatArray:
    """Centres 0, 1, ..., m-1: a unit-distance packing of ℝ/mℤ."""
    return np.arange(m, dtype=np.float64)[:, None]
