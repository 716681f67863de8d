"""Init file for lpsearch."""

from .problem import (
    LpSolution,
    SearchProblem,
    auto_radius,
    build_problem,
    canonical_sign,
    constraint_grid,
    frequency_set,
    problem_from_dict,
    problem_to_dict,
    solution_to_dict,
)
from .search import (
    Formulation,
    RefineResult,
    bound_from_solution,
    refine,
    solution_series,
    solve,
)
from .simplex import SimplexResult, simplex_solve

__all__ = [
    "Formulation",
    "LpSolution",
    "RefineResult",
    "SearchProblem",
    "SimplexResult",
    "auto_radius",
    "bound_from_solution",
    "build_problem",
    "canonical_sign",
    "constraint_grid",
    "frequency_set",
    "problem_from_dict",
    "problem_to_dict",
    "refine",
    "simplex_solve",
    "solution_series",
    "solution_to_dict",
    "solve",
]
