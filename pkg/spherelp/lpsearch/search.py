"""Solving search problems and refining them with cutting planes.

The search minimises g(0) = Σ c_t over c_t >= 0 with c_0 = 1 and
g(x_j) <= 0 at every constraint point. Its LP dual

    maximise Σ_j w_j ν_j  subject to  -Σ_j w_j cos(2πt·x_j) ν_j <= 1  (t != 0)

has one row per frequency and a feasible slack basis, so it is the default.
The coefficients c_t are the row prices of the dual, and an unbounded dual
means the search itself is infeasible.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from spherelp._types import FloatArray
from spherelp.auxfn import CertificationReport, CosineSeries, certify_nonpositive
from spherelp.bounds import DensityBound, Provenance, bound_from_sharp
from spherelp.config import DEFAULTS
from spherelp.lattice import Lattice, quotient_norm, reduce_to_fundamental
from spherelp.lpsearch.problem import REGION_SLACK, LpSolution, SearchProblem
from spherelp.lpsearch.simplex import simplex_solve

logger = logging.getLogger(__name__)

Formulation = Literal["dual", "primal"]
# stored constraints must hold at the returned coefficients to this accuracy
FEASIBILITY_TOL = 1e-8


def _trivial_solution(p: SearchProblem, formulation: Formulation) -> LpSolution:
    coeffs = np.zeros(len(p.frequencies))
    coeffs[0] = 1.0
    return LpSolution("optimal", coeffs, 1.0, 0, formulation)


def solve(
    p: SearchProblem,
    formulation: Formulation = "dual",
    pivot_cap: int = DEFAULTS.pivot_cap,
    pivot_tol: float = DEFAULTS.pivot_tol,
) -> LpSolution:
    """Minimise g(0) subject to c_0 = 1 and the stored constraints.

    Args:
    ----
        p (SearchProblem): The problem.
        formulation (Formulation): ``dual`` (one row per frequency) or
            ``primal`` (one row per constraint point plus c_0 = 1).
        pivot_cap (int): Maximum number of simplex pivots per phase.
        pivot_tol (float): Simplex zero tolerance.

    Returns:
    -------
        LpSolution: Status, coefficients and objective.

    """
    if formulation not in ("dual", "primal"):
        raise ValueError(f"Unknown formulation {formulation!r}.")
    if len(p.points) == 0:
        logger.warning("No constraint points; returning c = e_0.")
        return _trivial_solution(p, formulation)
    rows = p.weights[:, None] * p.cosine_matrix()
    nfreq = len(p.frequencies)

    if formulation == "dual":
        result = simplex_solve(
            p.weights,
            a_ub=-rows[:, 1:].T,
            b_ub=np.ones(nfreq - 1),
            maximize=True,
            pivot_cap=pivot_cap,
            pivot_tol=pivot_tol,
        )
        if result.status == "unbounded":
            return LpSolution(
                "infeasible", None, math.inf, result.iterations, formulation
            )
        if result.status != "optimal" or result.duals is None:
            return LpSolution(
                result.status, None, math.nan, result.iterations, formulation
            )
        coeffs = np.concatenate([[1.0], np.maximum(result.duals, 0.0)])
    else:
        unit = np.zeros((1, nfreq))
        unit[0, 0] = 1.0
        result = simplex_solve(
            np.ones(nfreq),
            a_ub=rows,
            b_ub=np.zeros(len(rows)),
            a_eq=unit,
            b_eq=np.ones(1),
            pivot_cap=pivot_cap,
            pivot_tol=pivot_tol,
        )
        if result.status != "optimal" or result.x is None:
            objective = math.inf if result.status == "infeasible" else math.nan
            return LpSolution(
                result.status, None, objective, result.iterations, formulation
            )
        coeffs = result.x.copy()
        coeffs[0] = 1.0

    violation = float(np.max(p.cosine_matrix() @ coeffs))
    if violation > FEASIBILITY_TOL:
        logger.warning("Solution violates a stored constraint by %.3e.", violation)
    solution = LpSolution(
        "optimal", coeffs, float(np.sum(coeffs)), result.iterations, formulation
    )
    logger.info(
        "LP %s: objective %.10f after %d pivots",
        formulation,
        solution.objective,
        solution.iterations,
    )
    return solution


def solution_series(p: SearchProblem, sol: LpSolution) -> CosineSeries:
    """The cosine series with the solution's coefficients."""
    if sol.coefficients is None:
        raise ValueError(f"Solution with status {sol.status!r} has no coefficients.")
    return CosineSeries(p.lattice, p.frequencies, sol.coefficients)


@dataclass(frozen=True)
class RefineResult:
    """Outcome of cutting-plane refinement.

    Attributes
    ----------
        problem (SearchProblem): Last problem, with the added cut points.
        solution (LpSolution): Solution of the last problem.
        report (CertificationReport | None): Certification of the last
            solution; None when no round ran.
        objective_history (list[float]): Objective after every solve, starting
            with the input solution.
        reports (list[CertificationReport]): Certification of every round.

    """

    problem: SearchProblem
    solution: LpSolution
    report: CertificationReport | None
    objective_history: list[float] = field(default_factory=list)
    reports: list[CertificationReport] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        """Whether the last solution passed certification."""
        return self.report is not None and self.report.passed


def _cut_point(p: SearchProblem, report: CertificationReport) -> FloatArray | None:
    assert report.argmax is not None
    nearest = quotient_norm(p.lattice, report.argmax)
    point = nearest.witness
    if nearest.value < 1.0:
        # centres may sit up to one covering radius inside the region
        point = point / nearest.value
        if quotient_norm(p.lattice, point).value < 1.0 - REGION_SLACK:
            logger.warning("Cannot project the cut point onto the region.")
            return None
    point = reduce_to_fundamental(p.lattice, point)
    if len(p.points) > 0:
        gaps = np.linalg.norm(p.points - point, axis=1)
        if float(np.min(gaps)) <= DEFAULTS.structural_tol:
            logger.info("Cut point is already a constraint; stopping refinement.")
            return None
    return point


def refine(
    p: SearchProblem,
    sol: LpSolution,
    rounds: int,
    tol: float,
    h: float,
    *,
    formulation: Formulation = "dual",
    jobs: int = 1,
) -> RefineResult:
    """Add the worst certified violation as a constraint and re-solve.

    Each round certifies the current solution with :func:`certify_nonpositive`;
    if its bound exceeds ``tol`` the sampled maximiser, projected onto
    quotient norm 1 when it lies inside the unit ball, becomes a new
    constraint point. Rounds stop early once a solution is certified or no
    new cut can be made.

    Args:
    ----
        p (SearchProblem): Problem ``sol`` solves.
        sol (LpSolution): Optimal solution of ``p``.
        rounds (int): Maximum number of rounds; 0 returns the input unchanged.
        tol (float): Certification tolerance.
        h (float): Certification grid spacing.
        formulation (Formulation): LP formulation for re-solves.
        jobs (int): Certification worker threads.

    Returns:
    -------
        RefineResult: Final problem, solution, certification and history.

    """
    if rounds < 0:
        raise ValueError(f"Number of rounds must be nonnegative, got {rounds}.")
    history = [sol.objective]
    reports: list[CertificationReport] = []
    report: CertificationReport | None = None
    for round_index in range(rounds):
        if sol.status != "optimal":
            logger.warning("Stopping refinement: solution status %s.", sol.status)
            report = None
            break
        report = certify_nonpositive(solution_series(p, sol), tol, h, jobs=jobs)
        reports.append(report)
        logger.debug(
            "round %d: objective %.10f, certified bound %.3e",
            round_index,
            sol.objective,
            report.certified_bound,
        )
        if report.passed or report.argmax is None:
            break
        cut = _cut_point(p, report)
        if cut is None:
            break
        p = p.with_points(cut)
        sol = solve(p, formulation)
        history.append(sol.objective)
        report = None
    if report is None and rounds > 0 and sol.status == "optimal":
        report = certify_nonpositive(solution_series(p, sol), tol, h, jobs=jobs)
        reports.append(report)
    return RefineResult(p, sol, report, history, reports)


def bound_from_solution(
    sol: LpSolution, lattice: Lattice, source: str = "search"
) -> DensityBound:
    """Per-m density bound objective/(2ⁿ|Λ_m|).

    Args:
    ----
        sol (LpSolution): Optimal solution.
        lattice (Lattice): Period lattice Λ_m of the problem.
        source (str): Run id recorded in the provenance.

    Returns:
    -------
        DensityBound: Bound flagged ``per-m``.

    """
    if sol.status != "optimal":
        raise ValueError(f"Solution with status {sol.status!r} gives no bound.")
    # g(0)/ĝ(0) with ĝ(0) = c_0|Λ_m| and c_0 = 1
    sharp_ratio = sol.objective / lattice.determinant
    provenance = Provenance(source, (lattice.m,), "per-m")
    return bound_from_sharp(lattice.n, sharp_ratio, provenance)
