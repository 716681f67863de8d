"""Basic linear algebra operations."""

from itertools import product

import numpy as np

from spherelp._types import FloatArray, IntArray
from spherelp.config import DEFAULTS


def operator_norm(
    matrix: FloatArray,
    tol: float = DEFAULTS.power_iteration_tol,
    max_iter: int = 10_000,
) -> float:
    """Largest singular value of a matrix by power iteration.

    Iterates v <- MᵀM v / |MᵀM v| until the Rayleigh quotient changes by less
    than ``tol`` relative. A single start vector may be orthogonal to the top
    eigenvector, so the iteration is run from the all-ones vector and from every
    unit vector and the largest estimate is kept. The returned value is nudged
    up by the relative tolerance, so it can be used as an upper bound.

    Args:
    ----
        matrix (FloatArray): Real matrix of shape (rows, cols).
        tol (float): Relative stopping tolerance.
        max_iter (int): Maximum number of iterations per start vector.

    Returns:
    -------
        float: Upper estimate of the spectral norm.

    """
    gram = matrix.T @ matrix
    dim = gram.shape[0]
    starts = np.vstack([np.ones((1, dim)) / np.sqrt(dim), np.eye(dim)])
    best = 0.0
    for start in starts:
        best = max(best, _power_iteration(gram, start, tol, max_iter))
    return float(np.sqrt(best)) * (1.0 + 10 * tol)


def _power_iteration(
    gram: FloatArray, start: FloatArray, tol: float, max_iter: int
) -> float:
    vec = start
    eigval = 0.0
    for _ in range(max_iter):
        w = gram @ vec
        norm_w = float(np.linalg.norm(w))
        if norm_w == 0.0:
            return 0.0
        new_eigval = float(vec @ w)
        vec = w / norm_w
        if abs(new_eigval - eigval) <= tol * abs(new_eigval):
            return new_eigval
        eigval = new_eigval
    return eigval


def sign_vectors(n: int) -> FloatArray:
    """All 2ⁿ vectors with entries ±1.

    Args:
    ----
        n (int): Dimension.

    Returns:
    -------
        FloatArray: Array of shape (2ⁿ, n).

    """
    return np.array(list(product([-1.0, 1.0], repeat=n)))


def half_diagonals(edges: FloatArray) -> FloatArray:
    """Norms of the half diagonals of the parallelepiped spanned by columns.

    Every point of the parallelepiped centred at the origin with edge vectors
    ``edges[:, i]`` lies within the largest returned value of the origin.

    Args:
    ----
        edges (FloatArray): Edge vectors as columns, shape (n, n).

    Returns:
    -------
        FloatArray: Norms of the 2ⁿ half diagonals.

    """
    signs = sign_vectors(edges.shape[1])
    return np.linalg.norm(0.5 * signs @ edges.T, axis=1)


def integer_box(lower: IntArray, upper: IntArray) -> IntArray:
    """All integer vectors k with lower <= k <= upper componentwise.

    Args:
    ----
        lower (IntArray): Lower corner.
        upper (IntArray): Upper corner.

    Returns:
    -------
        IntArray: Array of shape (count, n), lexicographically ordered.

    """
    axes = [
        np.arange(lo, hi + 1, dtype=np.int64)
        for lo, hi in zip(lower, upper, strict=True)
    ]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack(mesh, axis=-1).reshape(-1, len(axes))
