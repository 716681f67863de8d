"""Centre-density and packing-density bookkeeping.

For spheres of radius 1/2 the centre density is δ = (centres per unit volume)/2ⁿ,
and the packing density is Δ = π^{n/2}/Γ(n/2 + 1)·δ.
"""

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from spherelp._types import BoundKind, EmptyListError, FloatArray, VectorsLike
from spherelp.auxfn import CosineSeries, sharp
from spherelp.config import DEFAULTS
from spherelp.lattice import Lattice, quotient_norms, shortest_vector_norm

logger = logging.getLogger(__name__)


def gamma_half_integer(two_s: int) -> float:
    """Γ(s) for a positive integer or half-integer s, given as 2s.

    Integer s gives (s - 1)!; s = k + 1/2 gives (2k)!√π/(4^k k!).

    Args:
    ----
        two_s (int): Twice the argument, at least 1.

    Returns:
    -------
        float: Γ(two_s / 2).

    """
    if two_s < 1:
        raise ValueError(f"Argument 2s must be a positive integer, got {two_s}.")
    if two_s % 2 == 0:
        return float(math.factorial(two_s // 2 - 1))
    k = (two_s - 1) // 2
    return math.factorial(2 * k) * math.sqrt(math.pi) / (4**k * math.factorial(k))


def ball_volume_factor(n: int) -> float:
    """Volume π^{n/2}/Γ(n/2 + 1) of the unit ball in ℝⁿ."""
    if n < 1:
        raise ValueError(f"Dimension must be positive, got {n}.")
    return math.pi ** (n / 2) / gamma_half_integer(n + 2)


@dataclass(frozen=True)
class Provenance:
    """Where a density bound came from.

    Attributes
    ----------
        source (str): Series or construction name, or an LP run id.
        m_values (tuple[int, ...]): Scales the bound is based on.
        kind (BoundKind): ``per-m`` for a single periodic function, or
            ``sequence-liminf`` for the empirical liminf over several scales.
        tolerance (float | None): Certification tolerance, when certified.

    """

    source: str
    m_values: tuple[int, ...]
    kind: BoundKind
    tolerance: float | None = None


@dataclass(frozen=True)
class DensityBound:
    """Upper bound on the centre and packing density in dimension n.

    Attributes
    ----------
        n (int): Dimension.
        sharp (float): Sharp ratio g(0)/ĝ(0) the bound is derived from.
        delta (float): Centre-density bound sharp/2ⁿ.
        Delta (float): Packing-density bound.
        provenance (Provenance): Origin of the bound.

    """

    n: int
    sharp: float
    delta: float
    Delta: float  # noqa: N815
    provenance: Provenance

    @property
    def flag(self) -> BoundKind:
        """Per-m or sequence-liminf."""
        return self.provenance.kind

    @property
    def m_label(self) -> str:
        """Scales as written in tables: ``3`` or ``3;4;5``."""
        return ";".join(str(m) for m in self.provenance.m_values)


def bound_from_sharp(
    n: int, sharp_ratio: float, provenance: Provenance
) -> DensityBound:
    """Density bound delta = sharp/2ⁿ with the matching Delta.

    Args:
    ----
        n (int): Dimension.
        sharp_ratio (float): Positive sharp ratio.
        provenance (Provenance): Origin of the ratio.

    Returns:
    -------
        DensityBound: The bound.

    """
    if not sharp_ratio > 0:
        raise ValueError(f"Sharp ratio must be positive, got {sharp_ratio}.")
    delta = sharp_ratio / 2**n
    return DensityBound(
        n=n,
        sharp=sharp_ratio,
        delta=delta,
        Delta=ball_volume_factor(n) * delta,
        provenance=provenance,
    )


def bound_from_series(
    s: CosineSeries, source: str = "series", tolerance: float | None = None
) -> DensityBound:
    """Per-m density bound from a certified series.

    The bound holds for Λ_m-periodic configurations only.

    Args:
    ----
        s (CosineSeries): Series that passed certification.
        source (str): Name recorded in the provenance.
        tolerance (float | None): Certification tolerance used by the caller.

    Returns:
    -------
        DensityBound: Bound flagged ``per-m``.

    """
    provenance = Provenance(source, (s.lattice.m,), "per-m", tolerance)
    return bound_from_sharp(s.n, sharp(s), provenance)


def sequence_bound(
    entries: Iterable[tuple[int, float]], n: int = 1, source: str = "sequence"
) -> DensityBound:
    """Empirical liminf bound from sharp ratios at several scales.

    The estimate is the minimum of the supplied ratios, the smallest tail
    infimum available from finitely many m. A single entry is only per-m
    evidence and is flagged as such.

    Args:
    ----
        entries (Iterable[tuple[int, float]]): Pairs (m, sharp).
        n (int): Dimension.
        source (str): Name recorded in the provenance.

    Returns:
    -------
        DensityBound: The bound.

    Raises:
    ------
        EmptyListError: If no entries are given.

    """
    pairs = sorted((int(m), float(r)) for m, r in entries)
    if not pairs:
        raise EmptyListError("sequence_bound needs at least one (m, sharp) pair.")
    ms = tuple(m for m, _ in pairs)
    if len(set(ms)) != len(ms):
        raise ValueError(f"Scales must be distinct, got {ms}.")
    ratios = np.array([r for _, r in pairs])
    # the smallest tail infimum is the minimum of all ratios
    estimate = float(np.min(ratios))
    kind: BoundKind = "per-m" if len(pairs) == 1 else "sequence-liminf"
    if len(pairs) > 1 and np.any(np.diff(ratios) > DEFAULTS.derived_tol):
        logger.warning(
            "Sharp ratios are not monotone in m; the empirical liminf is only "
            "a surrogate."
        )
    return bound_from_sharp(n, estimate, Provenance(source, ms, kind))


def lower_bound_from_witness(
    centres: VectorsLike | FloatArray,
    lattice: Lattice,
    tol: float = DEFAULTS.derived_tol,
) -> float:
    """Centre density N/(2ⁿ|Λ_m|) of a periodic packing with N centres per cell.

    Args:
    ----
        centres (VectorsLike | FloatArray): Centres in one fundamental cell.
        lattice (Lattice): Period lattice Λ_m.
        tol (float): Slack on the unit separation.

    Returns:
    -------
        float: Centre density of the packing of radius-1/2 spheres.

    Raises:
    ------
        ValueError: If two centres are closer than 1 modulo Λ_m.

    """
    points = np.array(centres, dtype=np.float64).reshape(-1, lattice.n)
    count = len(points)
    if count == 0:
        raise EmptyListError("A witness packing needs at least one centre.")
    if count > 1:
        first, second = np.triu_indices(count, k=1)
        gaps = quotient_norms(lattice, points[first] - points[second])
        if float(np.min(gaps)) < 1.0 - tol:
            raise ValueError(
                f"Centres are not unit separated: minimum gap {np.min(gaps):.6f}."
            )
    # a centre must not overlap its own translates either
    if shortest_vector_norm(lattice) < 1.0 - tol:
        raise ValueError("The period lattice has vectors shorter than 1.")
    return count / (2**lattice.n * lattice.determinant)
