"""Dense linear algebra over F_p with numpy int64 arrays (p < 2^31)."""

from __future__ import annotations

import numpy as np


def _as_array(A, p):
    return np.asarray(A, dtype=np.int64) % p


def rref(A, p: int):
    """Reduced row echelon form of ``A`` mod ``p``; returns ``(R, pivot_columns)``."""
    R = _as_array(A, p).copy()
    if R.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        inv = pow(int(R[r, c]), -1, p)
        R[r] = (R[r] * inv) % p
        col = R[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            R[mask] = (R[mask] - np.outer(col[mask], R[r])) % p
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A, p: int) -> np.ndarray:
    """Basis of ``{v : A v = 0}`` mod ``p`` as the rows of the returned array."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = rref(A, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, pc in enumerate(pivots):
            basis[k, pc] = (-R[row, f]) % p
    return basis


def in_row_space(v, rows, p: int) -> bool:
    if len(rows) == 0:
        return not np.any(np.asarray(v) % p)
    base = rank(rows, p)
    return rank(np.vstack([rows, v]), p) == base
