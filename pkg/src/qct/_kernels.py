"""Row reduction over GF(p).

Two implementations of the same kernel live here: a numba ``@njit`` loop and a
vectorised numpy path.  The numba path is used when numba imports cleanly and
``QCT_DISABLE_NUMBA`` is unset (or ``0``); otherwise the numpy path is used.
Both return identical results, which the test-suite checks.
"""
from __future__ import annotations

import os

import numpy as np

_DISABLE = os.environ.get("QCT_DISABLE_NUMBA", "0").lower() not in ("", "0", "false", "no")

try:  # pragma: no cover - exercised implicitly
    if _DISABLE:
        raise ImportError("numba disabled by QCT_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False


def _modinv(a: int, p: int) -> int:
    return pow(int(a), p - 2, p)


def rref_numpy(mat: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form of ``mat`` mod ``p`` (numpy path)."""
    a = np.array(mat, dtype=np.int64, copy=True) % p
    m, n = a.shape
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        nz = np.nonzero(a[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            a[[row, piv]] = a[[piv, row]]
        inv = _modinv(a[row, col], p)
        a[row] = (a[row] * inv) % p
        factors = a[:, col].copy()
        factors[row] = 0
        if factors.any():
            a = (a - np.outer(factors, a[row])) % p
        pivots.append(col)
        row += 1
    return a, np.array(pivots, dtype=np.int64)


if HAVE_NUMBA:

    @njit(cache=True)
    def _rref_njit(a, p):  # pragma: no cover - compiled
        m, n = a.shape
        pivots = np.empty(min(m, n), dtype=np.int64)
        npiv = 0
        row = 0
        for col in range(n):
            if row >= m:
                break
            piv = -1
            for r in range(row, m):
                if a[r, col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != row:
                for c in range(n):
                    tmp = a[row, c]
                    a[row, c] = a[piv, c]
                    a[piv, c] = tmp
            # modular inverse by exponentiation
            base = a[row, col]
            e = p - 2
            inv = 1
            while e > 0:
                if e & 1:
                    inv = (inv * base) % p
                base = (base * base) % p
                e >>= 1
            for c in range(n):
                a[row, c] = (a[row, c] * inv) % p
            for r in range(m):
                if r != row:
                    f = a[r, col]
                    if f != 0:
                        for c in range(n):
                            a[r, c] = (a[r, c] - f * a[row, c]) % p
            pivots[npiv] = col
            npiv += 1
            row += 1
        return a, pivots[:npiv]

    def rref_numba(mat: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
        """Reduced row echelon form of ``mat`` mod ``p`` (numba path)."""
        a = np.ascontiguousarray(np.asarray(mat, dtype=np.int64) % p)
        if a.size == 0:
            return a.copy(), np.zeros(0, dtype=np.int64)
        return _rref_njit(a.copy(), np.int64(p))

    rref = rref_numba
else:
    rref_numba = None
    rref = rref_numpy

BACKEND = "numba" if HAVE_NUMBA else "numpy"
