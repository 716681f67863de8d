"""Admissible one-dimensional profiles."""

import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import cache

import numpy as np

from spherelp._types import FloatArray
from spherelp.config import DEFAULTS
from spherelp.utils.quadrature import integrate

Evaluator = Callable[[FloatArray], FloatArray]

# half width of the integration window for profiles without a Fourier evaluator
HAT_ZERO_WINDOW = 2000.0


@dataclass(frozen=True)
class AdmissibleProfile1D:
    """A function f on ℝ with |f(x)| <= C(1 + |x|)^(-1-δ).

    Attributes
    ----------
        name (str): Registry name.
        direct (Evaluator): Vectorised evaluator of f.
        decay_constant (float): C in the decay bound.
        decay_exponent (float): δ in the decay bound.
        fourier (Evaluator | None): Vectorised evaluator of f̂, if known.
        support_radius (float | None): R with f = 0 outside [-R, R], if compact.
        fourier_decay (tuple[float, float] | None): (C', δ') with
            |f̂(t)| <= C'(1 + |t|)^(-1-δ'), used for spectral tail bounds.
        decay_onset (float): |x| beyond which the decay bound is known to hold.

    """

    name: str
    direct: Evaluator
    decay_constant: float
    decay_exponent: float
    fourier: Evaluator | None = None
    support_radius: float | None = None
    fourier_decay: tuple[float, float] | None = None
    decay_onset: float = 0.0


def _triangle(x: FloatArray) -> FloatArray:
    return np.maximum(1.0 - np.abs(x), 0.0)


def _triangle_hat(t: FloatArray) -> FloatArray:
    return np.sinc(t) ** 2


def _ce_h(x: FloatArray) -> FloatArray:
    x = np.asarray(x, dtype=np.float64)
    out = np.empty_like(x)
    d = 1.0 - np.abs(x)
    near_one = np.abs(d) < DEFAULTS.singular_guard
    regular = ~near_one
    out[regular] = np.sinc(x[regular]) ** 2 / (1.0 - x[regular] ** 2)
    # sin πx = ±sin πd, so sinc²(x)/(1 - x²) = d·sinc²(d)/(x²(1 + |x|))
    dn = d[near_one]
    xn = x[near_one]
    out[near_one] = dn * np.sinc(dn) ** 2 / (xn**2 * (1.0 + np.abs(xn)))
    return out


def triangle_profile() -> AdmissibleProfile1D:
    """(1 - |x|) on [-1, 1] with f̂(t) = (sin πt/(πt))²."""
    return AdmissibleProfile1D(
        name="triangle",
        direct=_triangle,
        decay_constant=1.0,
        decay_exponent=1.0,
        fourier=_triangle_hat,
        support_radius=1.0,
        fourier_decay=(1.3, 1.0),
    )


def ce_h_profile() -> AdmissibleProfile1D:
    """sinc²(x)/(1 - x²), with value 1 at 0 and 0 at ±1.

    Only a direct evaluator is provided. The decay bound C = 1, δ = 3 is an
    engineering bound checked numerically for |x| >= 10.
    """
    return AdmissibleProfile1D(
        name="ce_h",
        direct=_ce_h,
        decay_constant=1.0,
        decay_exponent=3.0,
        decay_onset=10.0,
    )


PROFILES: dict[str, Callable[[], AdmissibleProfile1D]] = {
    "triangle": triangle_profile,
    "ce_h": ce_h_profile,
}


def get_profile(name: str) -> AdmissibleProfile1D:
    """Profile by registry name (``triangle`` or ``ce_h``)."""
    try:
        return PROFILES[name]()
    except KeyError:
        raise ValueError(
            f"Unknown profile {name!r}; expected one of {sorted(PROFILES)}."
        ) from None


@cache
def _quadrature_hat_zero(name: str) -> float:
    profile = get_profile(name)
    window = HAT_ZERO_WINDOW
    if profile.support_radius is not None:
        window = profile.support_radius
    result = integrate(
        profile.direct, -window, window, initial_panels=int(2 * math.ceil(window))
    )
    return result.value


def profile_hat_zero(p: AdmissibleProfile1D) -> float:
    """f̂(0), from the Fourier evaluator or by quadrature of f.

    Without a Fourier evaluator f is integrated over [-2000, 2000] (or its
    support) with unit Gauss–Legendre panels; for the registered profiles the
    neglected tail is below 1e-10.

    Args:
    ----
        p (AdmissibleProfile1D): The profile.

    Returns:
    -------
        float: f̂(0) = ∫f.

    """
    if p.fourier is not None:
        return float(p.fourier(np.zeros(1))[0])
    if p.name in PROFILES:
        return _quadrature_hat_zero(p.name)
    window = p.support_radius if p.support_radius is not None else HAT_ZERO_WINDOW
    panels = int(2 * math.ceil(window))
    return integrate(p.direct, -window, window, initial_panels=panels).value
