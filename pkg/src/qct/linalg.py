"""Exact linear algebra over the prime field GF(p).

All matrices are ``int64`` numpy arrays with entries in ``[0, p)``.
"""
from __future__ import annotations

import numpy as np

from qct._kernels import rref


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return (a @ b) % p


def rank(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    _, piv = rref(mat, p)
    return len(piv)


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Columns of the returned matrix form a basis of ``{x : mat @ x = 0}``."""
    m, n = mat.shape
    if n == 0:
        return zeros(0, 0)
    if m == 0:
        return identity(n)
    r, piv = rref(mat, p)
    piv = [int(c) for c in piv]
    pivset = set(piv)
    free = [c for c in range(n) if c not in pivset]
    basis = zeros(n, len(free))
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, c in enumerate(piv):
            basis[c, j] = (-r[i, f]) % p
    return basis


def column_space(mat: np.ndarray, p: int) -> np.ndarray:
    """A basis (as columns) of the column space, picked from the columns of ``mat``."""
    if mat.size == 0:
        return zeros(mat.shape[0], 0)
    _, piv = rref(mat, p)
    return np.array(mat[:, list(piv)], dtype=np.int64) % p


def complement_columns(span: np.ndarray, dim: int, p: int) -> np.ndarray:
    """Standard basis vectors completing the columns of ``span`` to a basis of GF(p)^dim."""
    if dim == 0:
        return zeros(0, 0)
    aug = np.concatenate([span % p, identity(dim)], axis=1) if span.size else identity(dim)
    _, piv = rref(aug, p)
    offset = span.shape[1] if span.size else 0
    chosen = [int(c) - offset for c in piv if c >= offset]
    return identity(dim)[:, chosen]


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Return ``x`` with ``a @ x = b`` (mod p).  Raises ``ValueError`` if inconsistent.

    When the solution is not unique the free variables are set to zero.
    """
    m, n = a.shape
    k = b.shape[1]
    if n == 0:
        if np.any(b % p):
            raise ValueError("inconsistent linear system")
        return zeros(0, k)
    aug = np.concatenate([a % p, b % p], axis=1)
    r, piv = rref(aug, p)
    x = zeros(n, k)
    for i, c in enumerate(piv):
        c = int(c)
        if c >= n:
            raise ValueError("inconsistent linear system")
        x[c] = r[i, n:]
    return x


def left_annihilator(mat: np.ndarray, p: int) -> np.ndarray:
    """Rows of the result span ``{y : y @ mat = 0}``; its kernel is the column space of ``mat``."""
    return nullspace(mat.T, p).T


def right_inverse(mat: np.ndarray, p: int) -> np.ndarray:
    """``r`` with ``mat @ r = I`` for a matrix of full row rank."""
    return solve(mat, identity(mat.shape[0]), p)


def is_zero(mat: np.ndarray, p: int) -> bool:
    return not np.any(np.asarray(mat) % p)
