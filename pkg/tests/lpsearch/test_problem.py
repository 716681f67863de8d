"""Tests for search problems."""

import math

import numpy as np
import pytest

from spherelp._types import (
    DimensionMismatchError,
    DocumentFormatError,
    EmptyFrequencySetError,
    GridTooFineError,
    InvalidSeriesError,
)
from spherelp.lattice import Lattice, hexagonal_lattice, integer_lattice
from spherelp.lpsearch import (
    SearchProblem,
    auto_radius,
    build_problem,
    canonical_sign,
    constraint_grid,
    frequency_set,
    problem_from_dict,
    problem_to_dict,
)


@pytest.mark.parametrize(
    "radius, expected",
    [(0.7, [0.0, 1 / 3, 2 / 3]), (0.5, [0.0, 1 / 3]), (1.0, [0.0, 1 / 3, 2 / 3, 1.0])],
)
def test_frequency_set_one_dim(radius: float, expected: list[float]) -> None:
    """Test frequencies k/3 of 3ℤ, one per ± pair and sorted by norm."""
    freqs = frequency_set(integer_lattice(1, 3), radius)
    np.testing.assert_allclose(freqs[:, 0], expected, atol=1e-12)


def test_frequency_set_hexagonal() -> None:
    """Test the three shortest dual pairs of Λ_2."""
    freqs = frequency_set(hexagonal_lattice(2), 0.6)
    assert freqs.shape == (4, 2)
    np.testing.assert_allclose(freqs[0], [0.0, 0.0])
    np.testing.assert_allclose(
        np.linalg.norm(freqs[1:], axis=1), 1 / math.sqrt(3), atol=1e-12
    )


def test_frequency_set_empty() -> None:
    """Test that a radius below the shortest dual vector raises."""
    with pytest.raises(EmptyFrequencySetError):
        frequency_set(integer_lattice(1), 0.5)
    with pytest.raises(ValueError):
        frequency_set(integer_lattice(1), 0.0)


def test_auto_radius(lattice_hex_m2: Lattice) -> None:
    """Test R = 1.05 times the shortest dual vector."""
    radius = auto_radius(lattice_hex_m2)
    assert radius == pytest.approx(1.05 / math.sqrt(3))
    assert len(frequency_set(lattice_hex_m2, radius)) == 4


def test_constraint_grid_one_dim() -> None:
    """Test the grid of 3ℤ with spacing 0.1: x = 1.0, 1.1, ..., 2.0."""
    points = constraint_grid(integer_lattice(1, 3), 0.1)
    np.testing.assert_allclose(points[:, 0], np.linspace(1.0, 2.0, 11), atol=1e-12)


def test_constraint_grid_contains_kissing_points(lattice_hex_m2: Lattice) -> None:
    """Test that the grid holds the base lattice points of the region."""
    points = constraint_grid(lattice_hex_m2, 0.05)
    for target in ([1.0, 0.0], [0.5, math.sqrt(3) / 2], [1.5, math.sqrt(3) / 2]):
        assert np.min(np.linalg.norm(points - np.array(target), axis=1)) < 1e-12


def test_constraint_grid_cap(lattice_hex_m2: Lattice) -> None:
    """Test that oversized grids raise."""
    with pytest.raises(GridTooFineError):
        constraint_grid(lattice_hex_m2, 0.01, sample_cap=10)


def test_empty_constraint_set_warns(caplog: pytest.LogCaptureFixture) -> None:
    """Test that a lattice without region points logs a warning."""
    with caplog.at_level("WARNING"):
        problem = build_problem(integer_lattice(1), 1.0, 0.1)
    assert len(problem.points) == 0
    assert "Constraint set is empty" in caplog.text


@pytest.mark.parametrize(
    "freqs, points, error",
    [
        ([[1 / 3], [0.0]], [[1.5]], InvalidSeriesError),
        ([[0.0], [0.5]], [[1.5]], InvalidSeriesError),
        ([[0.0], [1 / 3], [-1 / 3]], [[1.5]], InvalidSeriesError),
        ([[0.0, 0.0]], [[1.5]], DimensionMismatchError),
        ([[0.0], [1 / 3]], [[0.5]], ValueError),
    ],
)
def test_problem_validation(
    freqs: list[list[float]], points: list[list[float]], error: type
) -> None:
    """Test the structural checks of search problems."""
    with pytest.raises(error):
        SearchProblem(integer_lattice(1, 3), np.array(freqs), np.array(points))


def test_row_weights_validation() -> None:
    """Test that weights must be positive and one per point."""
    lattice = integer_lattice(1, 3)
    with pytest.raises(ValueError):
        SearchProblem(lattice, np.array([[0.0]]), np.array([[1.5]]), np.array([-1.0]))
    with pytest.raises(ValueError):
        SearchProblem(lattice, np.array([[0.0]]), np.array([[1.5]]), np.ones(2))


def test_with_points() -> None:
    """Test that extra points keep weights aligned."""
    lattice = integer_lattice(1, 3)
    problem = SearchProblem(
        lattice, np.array([[0.0], [1 / 3]]), np.array([[1.5]]), np.array([4.0])
    )
    extended = problem.with_points(np.array([[1.0], [2.0]]))
    assert extended.points.shape == (3, 1)
    np.testing.assert_allclose(extended.weights, [4.0, 1.0, 1.0])
    assert extended.cosine_matrix().shape == (3, 2)
    np.testing.assert_allclose(extended.cosine_matrix()[:, 0], 1.0)


def test_canonical_sign() -> None:
    """Test that the first nonzero entry becomes positive."""
    coeffs = np.array([[-1, 2], [0, -3], [0, 0], [2, -1]], dtype=np.int64)
    np.testing.assert_array_equal(
        canonical_sign(coeffs), [[1, -2], [0, 3], [0, 0], [2, -1]]
    )


def test_problem_document(lattice_hex_m2: Lattice) -> None:
    """Test that problem documents restore frequencies, points and settings."""
    problem = build_problem(lattice_hex_m2, 0.6, 0.1)
    restored = problem_from_dict(problem_to_dict(problem))
    np.testing.assert_allclose(restored.frequencies, problem.frequencies)
    np.testing.assert_allclose(restored.points, problem.points)
    assert restored.max_freq == 0.6
    assert restored.grid_spacing == 0.1


@pytest.mark.parametrize("doc", [{}, {"lattice": {"n": 1, "m": 3, "basis": [[1.0]]}}])
def test_problem_document_malformed(doc: dict[str, object]) -> None:
    """Test that malformed problem documents raise DocumentFormatError."""
    with pytest.raises(DocumentFormatError):
        problem_from_dict(doc)
