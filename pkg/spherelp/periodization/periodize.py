"""Periodization f_m(x) = Σ_k f(x + mk) and its Poisson dual.

The spectrum of f_m is the sampled transform: f_m(x) = (1/m) Σ_k f̂(k/m)
cos(2πkx/m), so a profile with f̂ >= 0 periodizes to a cosine series with
c_0 = f̂(0)/m and c_{k/m} = 2f̂(k/m)/m.
"""

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from spherelp._types import (
    FloatArray,
    MissingFourierError,
    NegativeSpectrumError,
    TailNotBoundedError,
)
from spherelp.auxfn import CosineSeries, evaluate_many
from spherelp.config import DEFAULTS
from spherelp.lattice import integer_lattice
from spherelp.periodization.profiles import AdmissibleProfile1D, profile_hat_zero

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PeriodizedValue:
    """Truncated periodization sum.

    Attributes
    ----------
        value (float): Σ_{|k| <= K} f(x + mk).
        tail_bound (float): Bound on the omitted terms; 0 for compact support.
        terms (int): Truncation index K.

    """

    value: float
    tail_bound: float
    terms: int


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError(f"Period m must be a positive integer, got {m}.")


def direct_truncation(
    p: AdmissibleProfile1D, m: int, x: float, tol: float
) -> tuple[int, float]:
    """Truncation index K and tail bound for the direct sum at reduced x.

    For compact support K = ceil((R + |x|)/m) and the tail is 0. Otherwise K is
    the smallest index with 2C(1 + m(K-1) - |x|)^(-δ)/(mδ) < tol, and never
    below the index where the decay bound starts to hold.

    Raises
    ------
        TailNotBoundedError: If the profile is not compactly supported and δ <= 0.

    """
    ax = abs(x)
    if p.support_radius is not None:
        return math.ceil((p.support_radius + ax) / m), 0.0
    c, delta = p.decay_constant, p.decay_exponent
    if delta <= 0:
        raise TailNotBoundedError(f"Decay exponent must be positive, got {delta}.")
    reach = (2.0 * c / (m * delta * tol)) ** (1.0 / delta)
    k = math.ceil(1.0 + (reach - 1.0 + ax) / m)
    k = max(k, math.ceil((p.decay_onset + ax) / m) + 1)
    tail = 2.0 * c * (1.0 + m * (k - 1) - ax) ** (-delta) / (m * delta)
    return k, tail


def periodize_direct(
    p: AdmissibleProfile1D, m: int, x: float, tol: float = DEFAULTS.direct_sum_tol
) -> PeriodizedValue:
    """f_m(x) by direct summation over the translates x + mk.

    Args:
    ----
        p (AdmissibleProfile1D): The profile.
        m (int): Period.
        x (float): Evaluation point.
        tol (float): Tail tolerance for profiles without compact support.

    Returns:
    -------
        PeriodizedValue: Value, tail bound and truncation index.

    """
    _check_m(m)
    reduced = x - m * math.floor(x / m + 0.5)
    k, tail = direct_truncation(p, m, reduced, tol)
    shifts = reduced + m * np.arange(-k, k + 1, dtype=np.float64)
    value = float(np.sum(p.direct(shifts)))
    return PeriodizedValue(value=value, tail_bound=tail, terms=k)


def periodize_spectrum(p: AdmissibleProfile1D, m: int, max_index: int) -> CosineSeries:
    """Cosine series of f_m from samples of f̂ at k/m, k = 0..max_index.

    Args:
    ----
        p (AdmissibleProfile1D): The profile.
        m (int): Period.
        max_index (int): Largest sampled index.

    Returns:
    -------
        CosineSeries: Series on mℤ with frequencies k/m.

    Raises:
    ------
        MissingFourierError: If the profile has no Fourier evaluator.
        NegativeSpectrumError: If some sampled f̂(k/m) < -1e-12.

    """
    _check_m(m)
    if p.fourier is None:
        raise MissingFourierError(f"Profile {p.name!r} has no Fourier evaluator.")
    if max_index < 0:
        raise ValueError(f"max_index must be nonnegative, got {max_index}.")
    ks = np.arange(max_index + 1, dtype=np.float64)
    samples = p.fourier(ks / m)
    negative = np.flatnonzero(samples < -DEFAULTS.structural_tol)
    if len(negative) > 0:
        k = int(negative[0])
        raise NegativeSpectrumError(
            f"f̂({k}/{m}) = {samples[k]:.3e} is negative for profile {p.name!r}."
        )
    coeffs = 2.0 * np.maximum(samples, 0.0) / m
    coeffs[0] = samples[0] / m
    return CosineSeries(integer_lattice(1, m), (ks / m)[:, None], coeffs)


def spectral_tail_bound(p: AdmissibleProfile1D, m: int, max_index: int) -> float:
    """Bound 2C'(1 + K/m)^(-δ')/δ' on the omitted spectrum terms, or inf."""
    if p.fourier_decay is None:
        return math.inf
    c, delta = p.fourier_decay
    return 2.0 * c * (1.0 + max_index / m) ** (-delta) / delta


@dataclass(frozen=True)
class PoissonResidual:
    """Agreement between the direct and the spectral periodization.

    Attributes
    ----------
        max_residual (float): Largest |direct - spectral| over the sample points.
        direct_tail (float): Largest direct-sum tail bound over the points.
        spectral_tail (float): Bound on the truncated spectrum.
        points (FloatArray): Sample points; the first is 0.

    """

    max_residual: float
    direct_tail: float
    spectral_tail: float
    points: FloatArray

    @property
    def within_bounds(self) -> bool:
        """Whether the residual is explained by the two tail bounds."""
        return self.max_residual <= self.direct_tail + self.spectral_tail + 1e-12


def poisson_residual(
    p: AdmissibleProfile1D,
    m: int,
    max_index: int,
    count: int,
    seed: int | None = 0,
) -> PoissonResidual:
    """Compare direct and spectral periodization at 0 and ``count`` random points.

    Args:
    ----
        p (AdmissibleProfile1D): Profile with both evaluators.
        m (int): Period.
        max_index (int): Spectrum truncation.
        count (int): Number of uniform points in [0, m).
        seed (int | None): Random seed.

    Returns:
    -------
        PoissonResidual: Residual and tail bounds.

    """
    series = periodize_spectrum(p, m, max_index)
    rng = np.random.default_rng(seed)
    points = np.concatenate([[0.0], rng.uniform(0.0, m, size=count)])
    direct = [periodize_direct(p, m, float(x)) for x in points]
    direct_values = np.array([d.value for d in direct])
    spectral_values = evaluate_many(series, points)
    residual = float(np.max(np.abs(direct_values - spectral_values)))
    result = PoissonResidual(
        max_residual=residual,
        direct_tail=max(d.tail_bound for d in direct),
        spectral_tail=spectral_tail_bound(p, m, max_index),
        points=points,
    )
    logger.info(
        "poisson residual %s m=%d K=%d: %.3e", p.name, m, max_index, result.max_residual
    )
    return result


def sharp_sequence(p: AdmissibleProfile1D, m_list: Iterable[int]) -> list[float]:
    """Ratios f_m(0)/f̂(0) for each m; their liminf estimates f(0)/f̂(0).

    Args:
    ----
        p (AdmissibleProfile1D): The profile.
        m_list (Iterable[int]): Periods.

    Returns:
    -------
        list[float]: One ratio per period, in input order.

    """
    periods = list(m_list)
    if not periods:
        return []
    hat0 = profile_hat_zero(p)
    return [periodize_direct(p, m, 0.0).value / hat0 for m in periods]
