"""Tests for the one-dimensional construction."""

import math

import numpy as np
import pytest
import sympy as sp

from spherelp._types import MTooSmallError
from spherelp.auxfn import cosine_sum, evaluate, evaluate_many, sharp
from spherelp.bounds import lower_bound_from_witness
from spherelp.constructions import (
    fourier_coefficient_quadrature,
    one_dim_closed_form,
    one_dim_coeffs,
    one_dim_series,
    one_dim_witness,
    s_coefficient,
)
from spherelp.lattice import integer_lattice


def _exact_s(m: int, k: int) -> float:
    theta = 2 * sp.pi / m
    value = ((k + 2) * sp.sin(theta) - sp.sin((k + 2) * theta)) / (
        (2 - 2 * sp.cos(theta)) * sp.sin(theta)
    )
    return float(sp.N(value, 30))


@pytest.mark.parametrize("m", [3, 4, 5, 6, 9])
def test_s_coefficient_exact(m: int) -> None:
    """Test s_k against a symbolic evaluation."""
    for k in range(m - 1):
        assert s_coefficient(m, k) == pytest.approx(_exact_s(m, k), rel=1e-12)


def test_coefficients_m4() -> None:
    """Test the hand-computed coefficients of g_4."""
    np.testing.assert_allclose(one_dim_coeffs(4).c, [2.0, 4.0, 2.0], atol=1e-12)


@pytest.mark.parametrize("m", range(3, 201))
def test_coefficients_positive(m: int) -> None:
    """Test positivity, g_m(0), m·c_0 = g_m(0) and the sharp ratio 1."""
    coeffs = one_dim_coeffs(m)
    value_at_zero = float(np.sum(coeffs.c))
    assert np.all(coeffs.c > 0)
    assert value_at_zero == pytest.approx(coeffs.value_at_zero, rel=1e-9)
    assert m * coeffs.c[0] == pytest.approx(value_at_zero, rel=1e-9)
    assert sharp(one_dim_series(m)) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("m", range(3, 65))
def test_closed_form_matches_cosine_sum(m: int) -> None:
    """Test the closed form against the plain cosine sum at random points."""
    rng = np.random.default_rng(m)
    xs = rng.uniform(-m / 2, m / 2, size=1000)
    np.testing.assert_allclose(
        one_dim_closed_form(m, xs),
        cosine_sum(one_dim_series(m), xs),
        rtol=1e-12,
        atol=1e-9,
    )


@pytest.mark.parametrize("m", [3, 4, 5, 7])
def test_closed_form_at_removable_points(m: int) -> None:
    """Test the closed form at and next to its removable singularities."""
    xs = np.array([0.0, 1e-9, 1.0, -1.0, 1.0 + 1e-8, 1.0 - 1e-8, m - 1e-9, m + 1.0])
    np.testing.assert_allclose(
        one_dim_closed_form(m, xs), cosine_sum(one_dim_series(m), xs), atol=1e-8
    )
    assert one_dim_closed_form(m, 0.0) == pytest.approx(
        one_dim_coeffs(m).value_at_zero, rel=1e-14
    )
    assert one_dim_closed_form(m, 1.0) == 0.0


@pytest.mark.parametrize("m", range(3, 65))
def test_nonpositive_on_region(m: int) -> None:
    """Test that g_m(x) <= 1e-12 at random x with quotient norm at least 1."""
    rng = np.random.default_rng(1000 + m)
    xs = rng.uniform(1.0, m - 1.0, size=10_000)
    values = evaluate_many(one_dim_series(m), xs)
    assert float(np.max(values)) <= 1e-12


@pytest.mark.parametrize("m", [48, 64])
def test_nonpositive_next_to_integers(m: int) -> None:
    """Test the sign of g_m just beside the integer zeros of large periods."""
    xs = np.array([21 + 1e-9, 7 + 2e-9, 9.00000044, 2 - 1e-10, m - 1 - 1e-12])
    series = one_dim_series(m)
    assert float(np.max(evaluate_many(series, xs))) <= 1e-12
    assert all(evaluate(series, x) <= 0.0 for x in xs)


@pytest.mark.parametrize("m", range(3, 13))
def test_quadrature_coefficients(m: int) -> None:
    """Test that integrating the closed form recovers the coefficients."""
    coeffs = one_dim_coeffs(m).c
    assert abs(fourier_coefficient_quadrature(m, m - 1)) <= 1e-8
    last = fourier_coefficient_quadrature(m, m - 2)
    assert last >= 1e-3
    assert last == pytest.approx(coeffs[m - 2], abs=1e-8)
    if m <= 5:
        for l, c in enumerate(coeffs):  # noqa: E741
            assert fourier_coefficient_quadrature(m, l) == pytest.approx(c, abs=1e-8)


@pytest.mark.parametrize("m", [0, 1, 2])
def test_m_too_small(m: int) -> None:
    """Test that the family needs m >= 3."""
    with pytest.raises(MTooSmallError):
        one_dim_coeffs(m)
    with pytest.raises(MTooSmallError):
        one_dim_closed_form(m, 0.5)


@pytest.mark.parametrize("m", [3, 4, 6])
def test_witness_is_tight(m: int) -> None:
    """Test that the integer packing meets the centre-density bound 1/2."""
    density = lower_bound_from_witness(one_dim_witness(m), integer_lattice(1, m))
    assert density == pytest.approx(0.5)
    assert math.isclose(density, sharp(one_dim_series(m)) / 2)
