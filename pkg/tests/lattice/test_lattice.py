"""Tests for the lattice module."""

import math

import numpy as np
import pytest

from spherelp._types import (
    DimensionMismatchError,
    DocumentFormatError,
    NonFinitePointError,
    RadiusTooLargeError,
    SingularBasisError,
)
from spherelp.lattice import (
    Lattice,
    dual_basis,
    enumerate_points,
    hexagonal_lattice,
    in_lattice,
    integer_lattice,
    lattice_from_dict,
    lattice_from_name,
    lattice_to_dict,
    make_lattice,
    quotient_norm,
    quotient_norms,
    reduce_to_fundamental,
    shortest_vector_norm,
)
from spherelp.utils._testing import brute_force_quotient_norm


@pytest.mark.parametrize(
    "basis, error",
    [
        ([[1.0, 0.0], [2.0, 0.0]], SingularBasisError),
        ([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]], DimensionMismatchError),
        ([[1.0, 0.0], [0.0]], DimensionMismatchError),
        ([[1.0, math.nan], [0.0, 1.0]], NonFinitePointError),
        ([], DimensionMismatchError),
    ],
)
def test_make_lattice_rejects(basis: list[list[float]], error: type) -> None:
    """Test that malformed bases raise the matching error."""
    with pytest.raises(error):
        make_lattice(basis)


@pytest.mark.parametrize("m", [0, -2, 1.5])
def test_make_lattice_rejects_scale(m: float) -> None:
    """Test that the scale must be a positive integer."""
    with pytest.raises(ValueError):
        make_lattice([[1.0]], m)  # type: ignore[arg-type]


@pytest.mark.parametrize(
    "lattice, determinant",
    [
        (integer_lattice(2, 2), 4.0),
        (hexagonal_lattice(1), math.sqrt(3) / 2),
        (hexagonal_lattice(2), 2 * math.sqrt(3)),
        (lattice_from_name("cubic"), 2 * math.sqrt(2)),
    ],
)
def test_determinant(lattice: Lattice, determinant: float) -> None:
    """Test the covolume of the scaled lattices."""
    assert lattice.determinant == pytest.approx(determinant, rel=1e-12)


def test_dual_basis_pairing(lattice_fixture: Lattice) -> None:
    """Test that the dual basis pairs to the identity with mB."""
    pairing = np.asarray(lattice_fixture.scaled_basis).T @ dual_basis(lattice_fixture)
    np.testing.assert_allclose(pairing, np.eye(lattice_fixture.n), atol=1e-12)


def test_quotient_norm_matches_brute_force(lattice_fixture: Lattice) -> None:
    """Test quotient norms against a wide coefficient-box search."""
    rng = np.random.default_rng(7)
    n = lattice_fixture.n
    reach = 13 if n <= 2 else 2
    points = rng.uniform(-3.0, 3.0, size=(10, n))
    for x in points:
        expected = brute_force_quotient_norm(lattice_fixture, x, reach)
        result = quotient_norm(lattice_fixture, x)
        assert result.value == pytest.approx(expected, abs=1e-12)
        assert np.linalg.norm(result.witness) == pytest.approx(result.value, abs=1e-12)
        assert in_lattice(lattice_fixture, x - result.witness)
    np.testing.assert_allclose(
        quotient_norms(lattice_fixture, points),
        [quotient_norm(lattice_fixture, x).value for x in points],
        atol=1e-12,
    )


@pytest.mark.parametrize(
    "x, value, witness",
    [(1.0, 1.0, 1.0), (2.0, 1.0, -1.0), (1.5, 1.5, 1.5), (-4.0, 1.0, -1.0)],
)
def test_quotient_norm_one_dim(x: float, value: float, witness: float) -> None:
    """Test the quotient norm on 3ℤ at hand-checked points."""
    result = quotient_norm(integer_lattice(1, 3), x)
    assert result.value == pytest.approx(value)
    np.testing.assert_allclose(result.witness, [witness])


def test_quotient_norm_rejects_bad_points(lattice_hex: Lattice) -> None:
    """Test that points of the wrong dimension or non-finite points raise."""
    with pytest.raises(DimensionMismatchError):
        quotient_norm(lattice_hex, [1.0, 2.0, 3.0])
    with pytest.raises(NonFinitePointError):
        quotient_norm(lattice_hex, [math.inf, 0.0])


@pytest.mark.parametrize("x, expected", [(-1.0, 2.0), (3.0, 0.0), (7.5, 1.5)])
def test_reduce_to_fundamental(x: float, expected: float) -> None:
    """Test that representatives land in [0, 3)."""
    np.testing.assert_allclose(
        reduce_to_fundamental(integer_lattice(1, 3), x), [expected], atol=1e-12
    )


def test_reduce_to_fundamental_hex(lattice_hex_m2: Lattice) -> None:
    """Test that the representative differs from x by a lattice vector."""
    x = np.array([5.3, -2.1])
    y = reduce_to_fundamental(lattice_hex_m2, x)
    assert in_lattice(lattice_hex_m2, y - x)
    coeffs = np.asarray(lattice_hex_m2.scaled_inverse) @ y
    assert np.all(coeffs >= 0.0) and np.all(coeffs < 1.0)


def test_in_lattice(lattice_hex_m2: Lattice) -> None:
    """Test membership of Λ_2 for the hexagonal lattice."""
    assert in_lattice(lattice_hex_m2, [2.0, 0.0])
    assert in_lattice(lattice_hex_m2, [1.0, math.sqrt(3)])
    assert not in_lattice(lattice_hex_m2, [1.0, 0.0])


@pytest.mark.parametrize(
    "lattice, primal, dual",
    [
        (integer_lattice(1, 3), 3.0, 1.0 / 3.0),
        (hexagonal_lattice(1), 1.0, 2.0 / math.sqrt(3)),
        (hexagonal_lattice(2), 2.0, 1.0 / math.sqrt(3)),
        (lattice_from_name("cubic"), math.sqrt(2), 1.0 / math.sqrt(2)),
    ],
)
def test_shortest_vector_norm(lattice: Lattice, primal: float, dual: float) -> None:
    """Test shortest vectors of lattices and of their duals."""
    assert shortest_vector_norm(lattice) == pytest.approx(primal, rel=1e-12)
    assert shortest_vector_norm(lattice, dual=True) == pytest.approx(dual, rel=1e-12)


@pytest.mark.parametrize(
    "lattice, radius, count",
    [
        (integer_lattice(2), 1.0, 5),
        (integer_lattice(2), 1.5, 9),
        (hexagonal_lattice(1), 1.0, 7),
        (integer_lattice(1, 3), 6.0, 5),
    ],
)
def test_enumerate_points(lattice: Lattice, radius: float, count: int) -> None:
    """Test the number of lattice points in a closed ball around 0."""
    points = enumerate_points(lattice, np.zeros(lattice.n), radius)
    assert len(points) == count
    assert len(np.unique(np.round(points, 9), axis=0)) == count


def test_enumerate_points_caps(lattice_hex: Lattice) -> None:
    """Test that huge radii and negative radii are rejected."""
    with pytest.raises(RadiusTooLargeError):
        enumerate_points(lattice_hex, [0.0, 0.0], 100.0, cap=10)
    with pytest.raises(ValueError):
        enumerate_points(lattice_hex, [0.0, 0.0], -1.0)


@pytest.mark.parametrize(
    "name, n, m",
    [("z1", 1, 1), ("Z3", 3, 2), ("hex", 2, 2), ("cubic", 3, 1)],
)
def test_lattice_from_name(name: str, n: int, m: int) -> None:
    """Test the named lattices."""
    lattice = lattice_from_name(name, m)
    assert lattice.n == n
    assert lattice.m == m


@pytest.mark.parametrize("name", ["z0", "square", ""])
def test_lattice_from_name_unknown(name: str) -> None:
    """Test that unknown names raise."""
    with pytest.raises(ValueError):
        lattice_from_name(name)


def test_lattice_document(lattice_skew: Lattice) -> None:
    """Test that lattice documents restore basis and scale."""
    scaled = lattice_skew.with_scale(4)
    restored = lattice_from_dict(lattice_to_dict(scaled))
    assert restored.m == 4
    np.testing.assert_allclose(restored.basis, lattice_skew.basis)
    assert restored.determinant == pytest.approx(16 * lattice_skew.determinant)


@pytest.mark.parametrize(
    "doc",
    [
        {"n": 2, "m": 1},
        {"n": 2, "m": 1, "basis": [[1.0, 0.0]]},
        {"n": "two", "m": 1, "basis": [[1.0, 0.0], [0.0, 1.0]]},
        [1, 2, 3],
    ],
)
def test_lattice_document_malformed(doc: object) -> None:
    """Test that malformed lattice documents raise DocumentFormatError."""
    with pytest.raises(DocumentFormatError):
        lattice_from_dict(doc)


def test_duality_on_random_pairs(lattice_fixture: Lattice) -> None:
    """Test that ⟨t, w⟩ is an integer for 1000 random lattice and dual points."""
    rng = np.random.default_rng(31)
    n = lattice_fixture.n
    lattice_points = rng.integers(-20, 21, size=(1000, n)) @ np.asarray(
        lattice_fixture.scaled_basis
    ).T
    dual_points = rng.integers(-20, 21, size=(1000, n)) @ dual_basis(lattice_fixture).T
    products = np.sum(lattice_points * dual_points, axis=1)
    np.testing.assert_allclose(products, np.round(products), atol=1e-9)


def test_quotient_norm_matches_enumeration(lattice_fixture: Lattice) -> None:
    """Test quotient norms of 1000 random points against a ball enumeration."""
    rng = np.random.default_rng(32)
    n = lattice_fixture.n
    longest = float(
        np.max(np.linalg.norm(np.asarray(lattice_fixture.scaled_basis), axis=0))
    )
    points = rng.uniform(-3.0, 3.0, size=(1000, n))
    vectorised = quotient_norms(lattice_fixture, points)
    for x, fast in zip(points, vectorised, strict=True):
        radius = float(np.linalg.norm(x)) + longest
        candidates = enumerate_points(lattice_fixture, np.zeros(n), radius)
        expected = float(np.min(np.linalg.norm(x - candidates, axis=1)))
        assert quotient_norm(lattice_fixture, x).value == pytest.approx(
            expected, abs=1e-12
        )
        assert fast == pytest.approx(expected, abs=1e-12)


def test_quotient_norm_translation_invariant(lattice_fixture: Lattice) -> None:
    """Test that q(x + v) = q(x) for random lattice vectors v."""
    rng = np.random.default_rng(33)
    n = lattice_fixture.n
    points = rng.uniform(-3.0, 3.0, size=(1000, n))
    shifts = rng.integers(-5, 6, size=(1000, n)) @ np.asarray(
        lattice_fixture.scaled_basis
    ).T
    np.testing.assert_allclose(
        quotient_norms(lattice_fixture, points + shifts),
        quotient_norms(lattice_fixture, points),
        atol=1e-12,
    )


def test_quotient_norm_triangle_inequality(lattice_fixture: Lattice) -> None:
    """Test that q(x + y) <= q(x) + q(y) on random pairs."""
    rng = np.random.default_rng(34)
    n = lattice_fixture.n
    xs = rng.uniform(-3.0, 3.0, size=(1000, n))
    ys = rng.uniform(-3.0, 3.0, size=(1000, n))
    lhs = quotient_norms(lattice_fixture, xs + ys)
    rhs = quotient_norms(lattice_fixture, xs) + quotient_norms(lattice_fixture, ys)
    assert np.all(lhs <= rhs + 1e-12)


@pytest.mark.parametrize("m", range(1, 7))
def test_determinant_scales(lattice_fixture: Lattice, m: int) -> None:
    """Test that det(Λ_m) = mⁿ·det(Λ)."""
    base = lattice_fixture.with_scale(1)
    scaled = lattice_fixture.with_scale(m)
    direct = abs(float(np.linalg.det(np.asarray(scaled.scaled_basis))))
    assert direct == pytest.approx(m**scaled.n * base.determinant, rel=1e-12)
    assert scaled.determinant == pytest.approx(direct, rel=1e-12)
