"""Tests for the construction registry."""

import pytest

from spherelp.constructions import construct, packing_witness, parse_name


@pytest.mark.parametrize(
    "name, m, expected",
    [
        ("onedim:5", None, ("onedim", 5)),
        ("onedim:5", 7, ("onedim", 7)),
        ("OneDim", 4, ("onedim", 4)),
        ("hex2", None, ("hex2", None)),
        ("cubic3", None, ("cubic3", None)),
    ],
)
def test_parse_name(
    name: str, m: int | None, expected: tuple[str, int | None]
) -> None:
    """Test the name and scale split."""
    assert parse_name(name, m) == expected


@pytest.mark.parametrize("name", ["onedim", "onedim:x", "square", ""])
def test_parse_name_rejects(name: str) -> None:
    """Test that unknown names and missing scales raise."""
    with pytest.raises(ValueError):
        parse_name(name)


@pytest.mark.parametrize(
    "name, n, m, terms",
    [
        ("onedim:3", 1, 3, 2),
        ("onedim:6", 1, 6, 5),
        ("hex2", 2, 2, 4),
        ("cubic3", 3, 1, 4),
    ],
)
def test_construct(name: str, n: int, m: int, terms: int) -> None:
    """Test dimension, scale and size of the named constructions."""
    series = construct(name)
    assert series.n == n
    assert series.lattice.m == m
    assert len(series.coefficients) == terms


@pytest.mark.parametrize(
    "name, m, count", [("onedim", 4, 4), ("hex2", None, 4), ("cubic3", None, 4)]
)
def test_packing_witness(name: str, m: int | None, count: int) -> None:
    """Test the number of centres per cell of the witness packings."""
    witness = packing_witness(name, m)
    assert witness.count == count
    assert witness.centres.shape == (count, witness.lattice.n)
