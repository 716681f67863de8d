"""Numerical defaults shared by all modules."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Defaults:
    """Tolerances and caps used when an operation is not given explicit values.

    Attributes
    ----------
        structural_tol (float): Tolerance for exact identities (duality, evenness).
        derived_tol (float): Tolerance for derived quantities (membership, sums).
        enumeration_cap (int): Maximum number of candidate coefficient vectors
            visited by lattice enumeration.
        sample_cap (int): Maximum number of samples in a certification grid.
        chunk_size (int): Number of grid samples evaluated per certification chunk.
        direct_sum_tol (float): Tail tolerance of direct periodization sums.
        quadrature_tol (float): Stopping tolerance of panel-doubling quadrature.
        quadrature_max_refinements (int): Maximum number of panel doublings.
        pivot_cap (int): Maximum number of simplex pivots per phase.
        pivot_tol (float): Smallest magnitude treated as nonzero by the simplex.
        singular_guard (float): Radius around removable singularities where
            closed forms fall back to a stable evaluation.
        power_iteration_tol (float): Relative stopping tolerance of power iteration.

    """

    structural_tol: float = 1e-12
    derived_tol: float = 1e-9
    enumeration_cap: int = 10**8
    sample_cap: int = 10**9
    chunk_size: int = 2**18
    direct_sum_tol: float = 1e-10
    quadrature_tol: float = 1e-10
    quadrature_max_refinements: int = 20
    pivot_cap: int = 10**6
    pivot_tol: float = 1e-10
    singular_guard: float = 1e-6
    power_iteration_tol: float = 1e-10


DEFAULTS = Defaults()
