"""Composite Gauss–Legendre quadrature with panel doubling."""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from functools import cache

import numpy as np
from numpy.polynomial.legendre import leggauss

from spherelp._types import FloatArray, QuadratureNotConvergedError
from spherelp.config import DEFAULTS

logger = logging.getLogger(__name__)

NODES_PER_PANEL = 16


@dataclass(frozen=True)
class QuadratureResult:
    """Value of a converged integral.

    Attributes
    ----------
        value (float): Integral estimate from the finest panel count.
        error (float): Difference between the last two refinements.
        panels (int): Number of panels used for ``value``.

    """

    value: float
    error: float
    panels: int


@cache
def _reference_rule(nodes: int) -> tuple[FloatArray, FloatArray]:
    points, weights = leggauss(nodes)
    return points, weights


def gauss_legendre_panels(
    func: Callable[[FloatArray], FloatArray],
    a: float,
    b: float,
    panels: int,
    nodes: int = NODES_PER_PANEL,
) -> float:
    """Composite Gauss–Legendre rule on equal panels.

    Panels are summed in a fixed order with numpy's pairwise summation, so the
    result does not depend on how the integrand is evaluated.

    Args:
    ----
        func (Callable[[FloatArray], FloatArray]): Vectorised integrand.
        a (float): Lower limit.
        b (float): Upper limit.
        panels (int): Number of equal panels.
        nodes (int): Gauss–Legendre nodes per panel.

    Returns:
    -------
        float: Integral estimate.

    """
    ref_x, ref_w = _reference_rule(nodes)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = mid[:, None] + half[:, None] * ref_x[None, :]
    values = func(x.ravel()).reshape(x.shape)
    return float(np.sum(half * (values @ ref_w)))


def integrate(
    func: Callable[[FloatArray], FloatArray],
    a: float,
    b: float,
    tol: float = DEFAULTS.quadrature_tol,
    max_refinements: int = DEFAULTS.quadrature_max_refinements,
    initial_panels: int = 1,
) -> QuadratureResult:
    """Integrate by doubling the panel count until two estimates agree.

    Args:
    ----
        func (Callable[[FloatArray], FloatArray]): Vectorised integrand.
        a (float): Lower limit.
        b (float): Upper limit.
        tol (float): Absolute agreement required between successive estimates.
        max_refinements (int): Maximum number of doublings.
        initial_panels (int): Panel count of the first estimate.

    Returns:
    -------
        QuadratureResult: Converged value.

    Raises:
    ------
        QuadratureNotConvergedError: If ``max_refinements`` doublings do not reach
            ``tol``.

    """
    panels = initial_panels
    previous = gauss_legendre_panels(func, a, b, panels)
    for refinement in range(1, max_refinements + 1):
        panels *= 2
        current = gauss_legendre_panels(func, a, b, panels)
        error = abs(current - previous)
        logger.debug("refinement %d: %d panels, change %.3e", refinement, panels, error)
        if error < tol:
            return QuadratureResult(value=current, error=error, panels=panels)
        previous = current
    raise QuadratureNotConvergedError(
        f"Quadrature on [{a}, {b}] did not converge to {tol} "
        f"after {max_refinements} refinements."
    )
