"""Rank computations: SVD with a relative threshold, and exact rational
elimination for matrices whose entries are known exactly."""

from fractions import Fraction

import numpy as np

DEFAULT_TOL = 1e-9


def numerical_rank(matrix, tol=DEFAULT_TOL):
    """Rank by singular values above tol * sigma_max."""
    a = np.asarray(matrix, dtype=float)
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def kernel_basis(matrix, ncols, tol=DEFAULT_TOL):
    """Orthonormal basis of the (numerical) kernel, as rows.

    ncols is needed so that matrices with no rows still report the full
    space as their kernel.
    """
    a = np.asarray(matrix, dtype=float).reshape(-1, ncols)
    if a.shape[0] == 0:
        return np.eye(ncols)
    _, s, vt = np.linalg.svd(a)
    smax = s[0] if len(s) else 0.0
    rank = int(np.sum(s > tol * smax)) if smax > 0 else 0
    return vt[rank:]


def exact_rank(rows):
    """Rank of a matrix with exactly-representable entries.

    Entries are coerced to Fraction and eliminated without rounding, so
    the answer carries no tolerance.
    """
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    col = 0
    while rank < len(work) and col < ncols:
        pivot = None
        for r in range(rank, len(work)):
            if work[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][col]
        for r in range(rank + 1, len(work)):
            f = work[r][col]
            if f == 0:
                continue
            ratio = f / pv
            for c in range(col, ncols):
                work[r][c] -= ratio * work[rank][c]
        rank += 1
        col += 1
    return rank
