"""Conftest file for test parameterisation with fixture."""

from typing import Any

import pytest
from pytest_lazyfixture import lazy_fixture

from spherelp.auxfn import CosineSeries
from spherelp.constructions import cubic_g3, hex_g2, one_dim_series
from spherelp.lattice import (
    Lattice,
    cubic_sqrt2_lattice,
    hexagonal_lattice,
    integer_lattice,
    make_lattice,
)


@pytest.fixture()
def lattice_z1() -> Lattice:
    return integer_lattice(1)


@pytest.fixture()
def lattice_z1_m3() -> Lattice:
    return integer_lattice(1, 3)


@pytest.fixture()
def lattice_z2_m2() -> Lattice:
    return integer_lattice(2, 2)


@pytest.fixture()
def lattice_hex() -> Lattice:
    return hexagonal_lattice(1)


@pytest.fixture()
def lattice_hex_m2() -> Lattice:
    return hexagonal_lattice(2)


@pytest.fixture()
def lattice_cubic() -> Lattice:
    return cubic_sqrt2_lattice(1)


@pytest.fixture()
def lattice_skew() -> Lattice:
    return make_lattice([[1.0, 0.0], [0.9, 0.2]], 1)


@pytest.fixture(
    params=[
        lazy_fixture("lattice_z1"),
        lazy_fixture("lattice_z1_m3"),
        lazy_fixture("lattice_z2_m2"),
        lazy_fixture("lattice_hex"),
        lazy_fixture("lattice_hex_m2"),
        lazy_fixture("lattice_cubic"),
        lazy_fixture("lattice_skew"),
    ]
)
def lattice_fixture(request: Any) -> Lattice:
    """Fixture for parameterising tests with different lattices."""
    return request.param


@pytest.fixture()
def series_onedim_3() -> CosineSeries:
    return one_dim_series(3)


@pytest.fixture()
def series_onedim_5() -> CosineSeries:
    return one_dim_series(5)


@pytest.fixture()
def series_hex() -> CosineSeries:
    return hex_g2()


@pytest.fixture()
def series_cubic() -> CosineSeries:
    return cubic_g3()


@pytest.fixture(
    params=[
        lazy_fixture("series_onedim_3"),
        lazy_fixture("series_onedim_5"),
        lazy_fixture("series_hex"),
        lazy_fixture("series_cubic"),
    ]
)
def construction_fixture(request: Any) -> CosineSeries:
    """Fixture for parameterising tests with the explicit constructions."""
    return request.param
