"""Tests for the hexagonal construction."""

import math

import numpy as np
import pytest

from spherelp._types import NotInRegionError
from spherelp.auxfn import CosineSeries, evaluate, evaluate_many, sharp
from spherelp.bounds import lower_bound_from_witness
from spherelp.constructions import (
    AFFINE_MAP,
    cosine_product_identity,
    exact_region_sign_2d,
    hex_witness,
    kissing_points_2d,
    lemma_f,
)
from spherelp.lattice import hexagonal_lattice, quotient_norms


@pytest.mark.parametrize(
    "x, y", [(0.0, 0.0), (0.3, -1.7), (1.0, 1.0), (2.5, 0.25), (-0.4, 3.9)]
)
def test_cosine_product_identity(x: float, y: float) -> None:
    """Test that the four-term sum equals its cosine product."""
    value, factored = cosine_product_identity(x, y)
    assert value == pytest.approx(factored, abs=1e-12)


def test_affine_map_identity(series_hex: CosineSeries) -> None:
    """Test that g_2(x) = f(Ax) at random points."""
    rng = np.random.default_rng(11)
    for x in rng.uniform(-4.0, 4.0, size=(20, 2)):
        mapped = AFFINE_MAP @ x
        value, _ = cosine_product_identity(float(mapped[0]), float(mapped[1]))
        assert evaluate(series_hex, x) == pytest.approx(value, abs=1e-12)


def test_exact_sign_example() -> None:
    """Test the sign of g_2 at a point strictly inside the region."""
    certificate = exact_region_sign_2d([1.0, 0.3])
    assert certificate.sign == -1
    assert certificate.value < 0


def test_kissing_points_are_zeros(series_hex: CosineSeries) -> None:
    """Test that g_2 vanishes at the six unit-norm kissing points."""
    points = kissing_points_2d()
    assert len(points) == 6
    np.testing.assert_allclose(np.linalg.norm(points, axis=1), 1.0, atol=1e-12)
    np.testing.assert_allclose(evaluate_many(series_hex, points), 0.0, atol=1e-12)
    for point in points:
        assert exact_region_sign_2d(point).sign == 0


def test_exact_sign_on_region() -> None:
    """Test that g_2 is never positive at random region points."""
    lattice = hexagonal_lattice(2)
    rng = np.random.default_rng(5)
    coeffs = rng.uniform(0.0, 1.0, size=(4000, 2))
    points = coeffs @ np.asarray(lattice.scaled_basis).T
    region = points[quotient_norms(lattice, points) >= 1.0]
    assert len(region) > 100
    assert all(exact_region_sign_2d(x).sign <= 0 for x in region)


def test_exact_sign_outside_region() -> None:
    """Test that points inside the unit quotient ball are rejected."""
    with pytest.raises(NotInRegionError):
        exact_region_sign_2d([0.3, 0.2])


def test_witness_is_tight(series_hex: CosineSeries) -> None:
    """Test that four centres per cell of Λ_2 meet the bound 1/(2√3)."""
    density = lower_bound_from_witness(hex_witness(), hexagonal_lattice(2))
    assert density == pytest.approx(1 / (2 * math.sqrt(3)))
    assert density == pytest.approx(sharp(series_hex) / 4)


def test_cosine_product_identity_random() -> None:
    """Test the factorisation on 10⁵ random points and its operation name."""
    rng = np.random.default_rng(12)
    points = rng.uniform(-4.0, 4.0, size=(100_000, 2))
    worst = max(
        abs(value - factored)
        for value, factored in (
            cosine_product_identity(float(x), float(y)) for x, y in points
        )
    )
    assert worst <= 1e-12
    assert lemma_f is cosine_product_identity


@pytest.mark.parametrize(
    "x, reduced",
    [
        ([1.0, 0.0], [-1.0, 0.0]),
        ([3.0, 0.0], [-1.0, 0.0]),
        ([-1.0, 0.0], [-1.0, 0.0]),
        ([0.5, math.sqrt(3) / 2], [0.0, -1.0]),
    ],
)
def test_exact_sign_reduction_half_open(x: list[float], reduced: list[float]) -> None:
    """Test that reduced coordinates at cell faces land on -1, never on 1."""
    certificate = exact_region_sign_2d(x)
    np.testing.assert_allclose(certificate.reduced, reduced, atol=1e-12)
    assert certificate.sign == 0


def test_exact_sign_reduction_range() -> None:
    """Test that reduced coordinates of random region points lie in [-1, 1)."""
    lattice = hexagonal_lattice(2)
    rng = np.random.default_rng(13)
    points = rng.uniform(-6.0, 6.0, size=(3000, 2))
    region = points[quotient_norms(lattice, points) >= 1.0]
    reduced = np.array([exact_region_sign_2d(x).reduced for x in region])
    assert np.all(reduced >= -1.0)
    assert np.all(reduced < 1.0)
