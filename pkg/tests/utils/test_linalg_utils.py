"""Tests for the linalg_utils module."""

import numpy as np
import pytest

from spherelp.utils import half_diagonals, integer_box, operator_norm, sign_vectors


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("shape", [(1, 1), (2, 2), (3, 3), (4, 2)])
def test_operator_norm(seed: int, shape: tuple[int, int]) -> None:
    """Test the power iteration against the SVD."""
    matrix = np.random.default_rng(seed).normal(size=shape)
    exact = np.linalg.norm(matrix, ord=2)
    assert operator_norm(matrix) == pytest.approx(exact, rel=1e-6)


def test_operator_norm_orthogonal_start() -> None:
    """Test a matrix whose top direction is orthogonal to the all-ones vector."""
    matrix = np.array([[3.0, -3.0], [0.0, 0.0]])
    assert operator_norm(matrix) == pytest.approx(3.0 * np.sqrt(2.0), rel=1e-8)


def test_operator_norm_zero() -> None:
    """Test that the zero matrix has norm zero."""
    assert operator_norm(np.zeros((2, 2))) == 0.0


def test_sign_vectors() -> None:
    """Test that all ±1 patterns appear once."""
    signs = sign_vectors(3)
    assert signs.shape == (8, 3)
    assert len({tuple(row) for row in signs}) == 8
    assert set(np.unique(signs)) == {-1.0, 1.0}


def test_half_diagonals() -> None:
    """Test the half diagonals of a unit square and a skew cell."""
    np.testing.assert_allclose(half_diagonals(np.eye(2)), np.sqrt(0.5))
    skew = np.array([[1.0, 1.0], [0.0, 1.0]])
    assert np.max(half_diagonals(skew)) == pytest.approx(np.sqrt(5.0) / 2)


def test_integer_box() -> None:
    """Test the lexicographic enumeration of an integer box."""
    box = integer_box(np.array([-1, 0]), np.array([0, 2]))
    np.testing.assert_array_equal(
        box, [[-1, 0], [-1, 1], [-1, 2], [0, 0], [0, 1], [0, 2]]
    )
    assert integer_box(np.array([1]), np.array([0])).shape == (0, 1)
