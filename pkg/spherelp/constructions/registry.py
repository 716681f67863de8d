"""Look up constructions and witness packings by name."""

from dataclasses import dataclass

import numpy as np

from spherelp._types import FloatArray
from spherelp.auxfn import CosineSeries
from spherelp.constructions.cubic import cubic_g3, cubic_witness
from spherelp.constructions.hexagonal import hex_g2, hex_witness
from spherelp.constructions.one_dim import one_dim_series, one_dim_witness
from spherelp.lattice import (
    Lattice,
    cubic_sqrt2_lattice,
    hexagonal_lattice,
    integer_lattice,
)

CONSTRUCTION_NAMES = ("onedim", "hex2", "cubic3")


def parse_name(name: str, m: int | None = None) -> tuple[str, int | None]:
    """Split ``onedim:5`` style names into base name and m.

    An explicit ``m`` argument wins over the suffix.

    Raises
    ------
        ValueError: For unknown names, or ``onedim`` without m.

    """
    base, _, suffix = name.strip().lower().partition(":")
    if base not in CONSTRUCTION_NAMES:
        raise ValueError(
            f"Unknown construction {name!r}; expected one of {CONSTRUCTION_NAMES}."
        )
    if m is None and suffix:
        if not suffix.isdigit():
            raise ValueError(f"Bad scale suffix in {name!r}.")
        m = int(suffix)
    if base == "onedim" and m is None:
        raise ValueError("The onedim construction needs m (onedim:<m> or --m).")
    return base, m


def construct(name: str, m: int | None = None) -> CosineSeries:
    """The named construction: ``onedim:<m>``, ``hex2`` or ``cubic3``.

    Args:
    ----
        name (str): Construction name.
        m (int | None): Period of the one-dimensional family.

    Returns:
    -------
        CosineSeries: The auxiliary function.

    """
    base, m = parse_name(name, m)
    if base == "onedim":
        assert m is not None
        return one_dim_series(m)
    if base == "hex2":
        return hex_g2()
    return cubic_g3()


@dataclass(frozen=True)
class PackingWitness:
    """Sphere centres in one fundamental cell of a scaled lattice.

    Attributes
    ----------
        lattice (Lattice): Period lattice Λ_m.
        centres (FloatArray): Centres of shape (count, n).

    """

    lattice: Lattice
    centres: FloatArray

    @property
    def count(self) -> int:
        """Number of centres per cell."""
        return int(self.centres.shape[0])


def packing_witness(name: str, m: int | None = None) -> PackingWitness:
    """The periodic packing that shows the named construction is tight.

    Args:
    ----
        name (str): Construction name.
        m (int | None): Period of the one-dimensional family.

    Returns:
    -------
        PackingWitness: Lattice and centres.

    """
    base, m = parse_name(name, m)
    if base == "onedim":
        assert m is not None
        return PackingWitness(integer_lattice(1, m), one_dim_witness(m))
    if base == "hex2":
        return PackingWitness(hexagonal_lattice(2), hex_witness())
    return PackingWitness(cubic_sqrt2_lattice(1), np.asarray(cubic_witness()))
