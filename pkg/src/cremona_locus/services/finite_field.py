"""
Dense linear algebra over F_p with numpy.

Entries are int64 in [0, p). The prime is kept below 2^31 so a product of
two entries fits in int64; every multiplication is reduced right away.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from ..exceptions import OracleError

logger = logging.getLogger(__name__)

MAX_PRIME = 2**31


def as_field(matrix, p: int) -> np.ndarray:
    """Copy `matrix` into int64 and reduce mod p."""
    return np.array(matrix, dtype=np.int64) % p


def inverse_mod(a: int, p: int) -> int:
    a = int(a) % p
    if a == 0:
        raise OracleError(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def row_reduce(matrix, p: int) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form mod p.

    Pivots are taken as the first nonzero entry of each column, scanning rows
    in their given order. Returns (rref, pivot_columns).
    """
    A = as_field(matrix, p)
    if A.ndim != 2:
        raise OracleError(f"expected a matrix, got shape {A.shape}")
    rows, cols = A.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(A[r:, c])[0]
        if nonzero.size == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = (A[r] * inverse_mod(A[r, c], p)) % p
        factors = A[:, c].copy()
        factors[r] = 0
        targets = np.nonzero(factors)[0]
        if targets.size:
            A[targets] = (A[targets] - (factors[targets, None] * A[r]) % p) % p
        pivots.append(c)
        r += 1
    logger.debug("row reduced %dx%d mod %d: rank %d", rows, cols, p, len(pivots))
    return A, pivots


def rank(matrix, p: int) -> int:
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0
    return len(row_reduce(matrix, p)[1])


def nullspace(matrix, p: int, cols: Optional[int] = None) -> np.ndarray:
    """Basis of {x : A x = 0} as the rows of the returned array."""
    matrix = np.asarray(matrix, dtype=np.int64)
    if cols is None:
        cols = matrix.shape[1]
    if matrix.size == 0:
        return np.eye(cols, dtype=np.int64)
    reduced, pivots = row_reduce(matrix, p)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for n, f in enumerate(free):
        basis[n, f] = 1
        for row, c in enumerate(pivots):
            basis[n, c] = (-reduced[row, f]) % p
    return basis


def solve(matrix, rhs, p: int) -> np.ndarray:
    """Unique solution of the square system A x = b mod p."""
    A = as_field(matrix, p)
    n = A.shape[0]
    augmented = np.concatenate([A, as_field(rhs, p).reshape(n, 1)], axis=1)
    reduced, pivots = row_reduce(augmented, p)
    if pivots != list(range(n)):
        raise OracleError(f"singular {n}x{n} system mod {p}")
    return reduced[:, n].copy()


def inverse(matrix, p: int) -> np.ndarray:
    A = as_field(matrix, p)
    n = A.shape[0]
    augmented = np.concatenate([A, np.eye(n, dtype=np.int64)], axis=1)
    reduced, pivots = row_reduce(augmented, p)
    if pivots[:n] != list(range(n)):
        raise OracleError(f"singular {n}x{n} matrix mod {p}")
    return reduced[:, n:].copy()


def mat_vec(matrix, vector, p: int) -> np.ndarray:
    """A x mod p, row by row; sums stay far below 2^63 for our sizes."""
    A = as_field(matrix, p)
    x = as_field(vector, p)
    return ((A * x) % p).sum(axis=-1) % p


def cross(u, v, p: int) -> np.ndarray:
    u = as_field(u, p)
    v = as_field(v, p)
    return np.array(
        [
            (u[1] * v[2] - u[2] * v[1]) % p,
            (u[2] * v[0] - u[0] * v[2]) % p,
            (u[0] * v[1] - u[1] * v[0]) % p,
        ],
        dtype=np.int64,
    )


def normalize(point, p: int) -> Tuple[int, ...]:
    """Projective representative with first nonzero coordinate 1."""
    x = as_field(point, p)
    nonzero = np.nonzero(x)[0]
    if nonzero.size == 0:
        raise OracleError("the zero vector is not a projective point")
    scale = inverse_mod(x[nonzero[0]], p)
    return tuple(int(v) for v in (x * scale) % p)
