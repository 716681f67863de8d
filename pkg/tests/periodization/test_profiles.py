"""Tests for the admissible profiles."""

import numpy as np
import pytest

from spherelp.periodization import (
    ce_h_profile,
    get_profile,
    profile_hat_zero,
    triangle_profile,
)


def test_triangle_values() -> None:
    """Test the triangle and its transform."""
    p = triangle_profile()
    np.testing.assert_allclose(
        p.direct(np.array([-2.0, -0.5, 0.0, 0.25, 1.0])), [0.0, 0.5, 1.0, 0.75, 0.0]
    )
    assert p.fourier is not None
    np.testing.assert_allclose(
        p.fourier(np.array([0.0, 1.0, 2.0])), [1.0, 0.0, 0.0], atol=1e-12
    )
    assert profile_hat_zero(p) == 1.0


def test_ce_h_values() -> None:
    """Test ce_h at 0, at its removable zeros and symmetric around them."""
    p = ce_h_profile()
    np.testing.assert_allclose(p.direct(np.array([0.0, 1.0, -1.0])), [1.0, 0.0, 0.0])
    near = np.array([1.0 - 1e-7, 1.0 + 1e-7, -1.0 + 1e-7])
    values = p.direct(near)
    assert np.all(np.isfinite(values))
    np.testing.assert_allclose(np.abs(values), 5e-8, rtol=1e-3)
    xs = np.linspace(0.1, 6.0, 60)
    np.testing.assert_allclose(p.direct(xs), p.direct(-xs))


def test_ce_h_continuous_at_guard() -> None:
    """Test that both evaluation branches agree around x = 1."""
    p = ce_h_profile()
    for d in (0.9e-6, 1.1e-6):
        assert p.direct(np.array([1.0 - d]))[0] == pytest.approx(d / 2, rel=1e-5)


def test_ce_h_decay_bound() -> None:
    """Test |ce_h(x)| <= C(1 + |x|)^(-1-δ) beyond the decay onset."""
    p = ce_h_profile()
    xs = np.linspace(p.decay_onset, 500.0, 20001)
    bound = p.decay_constant * (1.0 + xs) ** (-1.0 - p.decay_exponent)
    assert np.all(np.abs(p.direct(xs)) <= bound)


def test_ce_h_hat_zero() -> None:
    """Test that ∫ce_h = 1."""
    assert profile_hat_zero(ce_h_profile()) == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("name", ["triangle", "ce_h"])
def test_get_profile(name: str) -> None:
    """Test registry lookup."""
    assert get_profile(name).name == name


def test_get_profile_unknown() -> None:
    """Test that unknown profiles raise."""
    with pytest.raises(ValueError):
        get_profile("gaussian")
