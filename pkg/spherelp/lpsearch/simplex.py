"""Dense two-phase tableau simplex with Bland's pivoting rule.

Solves

    maximise or minimise  p·x
    subject to            A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0.

Rows with a negative right-hand side are negated first. Phase 1 drives the
artificial variables of ``=`` and flipped rows to zero; phase 2 optimises the
objective from the feasible basis. The entering column is the lowest-index
column with a negative reduced cost and the leaving row has the minimum ratio,
ties going to the lowest-index basic variable, which rules out cycling.
"""

import logging
from dataclasses import dataclass

import numpy as np

from spherelp._types import FloatArray, IntArray, LpStatus
from spherelp.config import DEFAULTS

logger = logging.getLogger(__name__)

# phase 1 optimum above this means the constraints are infeasible
_FEASIBILITY_TOL = 1e-9


@dataclass(frozen=True)
class SimplexResult:
    """Outcome of :func:`simplex_solve`.

    Attributes
    ----------
        status (LpStatus): Optimal, infeasible, unbounded or iteration-limit.
        x (FloatArray | None): Optimal point, when optimal.
        objective (float): Optimal value p·x; nan unless optimal.
        duals (FloatArray | None): Shadow prices ∂objective/∂b_ub of the
            inequality rows, when optimal.
        iterations (int): Pivots over both phases.

    """

    status: LpStatus
    x: FloatArray | None
    objective: float
    duals: FloatArray | None
    iterations: int


def _pivot(tableau: FloatArray, row: int, col: int) -> None:
    tableau[row] /= tableau[row, col]
    factors = tableau[:, col].copy()
    factors[row] = 0.0
    tableau -= np.outer(factors, tableau[row])


def _entering(z_row: FloatArray, allowed: int, tol: float) -> int:
    candidates = np.flatnonzero(z_row[:allowed] < -tol)
    return int(candidates[0]) if len(candidates) > 0 else -1


def _leaving(tableau: FloatArray, basis: IntArray, col: int, tol: float) -> int:
    column = tableau[:-1, col]
    rows = np.flatnonzero(column > tol)
    if len(rows) == 0:
        return -1
    ratios = tableau[rows, -1] / column[rows]
    best = float(np.min(ratios))
    ties = rows[ratios <= best + tol * max(1.0, abs(best))]
    return int(ties[np.argmin(basis[ties])])


def _run(
    tableau: FloatArray, basis: IntArray, allowed: int, cap: int, tol: float
) -> tuple[LpStatus, int]:
    for iteration in range(cap):
        col = _entering(tableau[-1], allowed, tol)
        if col < 0:
            return "optimal", iteration
        row = _leaving(tableau, basis, col, tol)
        if row < 0:
            return "unbounded", iteration
        _pivot(tableau, row, col)
        basis[row] = col
    return "iteration-limit", cap


def simplex_solve(
    objective: FloatArray,
    a_ub: FloatArray | None = None,
    b_ub: FloatArray | None = None,
    a_eq: FloatArray | None = None,
    b_eq: FloatArray | None = None,
    *,
    maximize: bool = False,
    pivot_cap: int = DEFAULTS.pivot_cap,
    pivot_tol: float = DEFAULTS.pivot_tol,
) -> SimplexResult:
    """Solve a linear program over x >= 0.

    Args:
    ----
        objective (FloatArray): Objective vector p.
        a_ub (FloatArray | None): Inequality matrix.
        b_ub (FloatArray | None): Inequality right-hand side.
        a_eq (FloatArray | None): Equality matrix.
        b_eq (FloatArray | None): Equality right-hand side.
        maximize (bool): Maximise instead of minimise.
        pivot_cap (int): Maximum number of pivots per phase.
        pivot_tol (float): Magnitudes below this are treated as zero.

    Returns:
    -------
        SimplexResult: Status, solution and duals.

    """
    p = np.asarray(objective, dtype=np.float64)
    nvar = len(p)
    a1 = np.zeros((0, nvar)) if a_ub is None else np.asarray(a_ub, dtype=np.float64)
    b1 = np.zeros(0) if b_ub is None else np.asarray(b_ub, dtype=np.float64)
    a2 = np.zeros((0, nvar)) if a_eq is None else np.asarray(a_eq, dtype=np.float64)
    b2 = np.zeros(0) if b_eq is None else np.asarray(b_eq, dtype=np.float64)
    a1 = a1.reshape(len(b1), nvar)
    a2 = a2.reshape(len(b2), nvar)
    sense = 1.0 if maximize else -1.0

    n_ub, n_eq = len(b1), len(b2)
    flipped = b1 < 0
    a1 = np.where(flipped[:, None], -a1, a1)
    b1 = np.abs(b1)
    eq_flip = b2 < 0
    a2 = np.where(eq_flip[:, None], -a2, a2)
    b2 = np.abs(b2)
    rhs_scale = max(1.0, float(np.max(np.concatenate([b1, b2]), initial=0.0)))

    # columns: x | one slack or surplus per ub row | artificials
    rows = n_ub + n_eq
    needs_art = np.concatenate([flipped, np.ones(n_eq, dtype=bool)])
    art_rows = np.flatnonzero(needs_art)
    n_art = len(art_rows)
    slack0 = nvar
    art0 = nvar + n_ub
    width = art0 + n_art
    tableau = np.zeros((rows + 1, width + 1))
    tableau[:n_ub, :nvar] = a1
    tableau[n_ub:rows, :nvar] = a2
    tableau[:n_ub, slack0 : slack0 + n_ub] = np.diag(np.where(flipped, -1.0, 1.0))
    tableau[:rows, -1] = np.concatenate([b1, b2])
    basis = np.arange(slack0, slack0 + rows, dtype=np.int64)
    for k, r in enumerate(art_rows):
        tableau[r, art0 + k] = 1.0
        basis[r] = art0 + k

    iterations = 0
    if n_art > 0:
        tableau[-1] = -np.sum(tableau[art_rows], axis=0)
        tableau[-1, art0:width] = 0.0
        status, used = _run(tableau, basis, art0, pivot_cap, pivot_tol)
        iterations += used
        logger.debug("phase 1: %s after %d pivots", status, used)
        if status == "iteration-limit":
            return SimplexResult(status, None, float("nan"), None, iterations)
        if -tableau[-1, -1] > _FEASIBILITY_TOL * rhs_scale:
            return SimplexResult("infeasible", None, float("nan"), None, iterations)
        # drive remaining artificials out, dropping redundant rows
        keep = np.ones(rows + 1, dtype=bool)
        for r in range(rows):
            if basis[r] < art0:
                continue
            candidates = np.flatnonzero(np.abs(tableau[r, :art0]) > pivot_tol)
            if len(candidates) > 0:
                _pivot(tableau, r, int(candidates[0]))
                basis[r] = int(candidates[0])
            else:
                keep[r] = False
        tableau = np.delete(tableau[keep], np.s_[art0:width], axis=1)
        basis = basis[keep[:-1]]

    z_row = np.zeros(tableau.shape[1])
    z_row[:nvar] = -sense * p
    for r, b in enumerate(basis):
        if b < nvar and z_row[b] != 0.0:
            z_row -= z_row[b] * tableau[r]
    tableau[-1] = z_row
    status, used = _run(tableau, basis, art0, pivot_cap, pivot_tol)
    iterations += used
    logger.debug("phase 2: %s after %d pivots", status, used)
    if status != "optimal":
        return SimplexResult(status, None, float("nan"), None, iterations)

    x = np.zeros(tableau.shape[1] - 1)
    x[basis] = tableau[: len(basis), -1]
    x = np.maximum(x[:nvar], 0.0)
    # reduced costs of slack and surplus columns are the row prices of the original rows
    duals = sense * tableau[-1, slack0 : slack0 + n_ub]
    return SimplexResult("optimal", x, float(p @ x), duals, iterations)
