"""Small dense linear-algebra toolkit.

The symmetric tridiagonal eigensolver is an implicit-shift QL iteration
written out here because it drives the node computation. The dense
kernels (LU with condition estimate, nonsymmetric eigenvalues,
column-pivoted QR least squares) are thin wrappers around LAPACK through
scipy with the contracts the rest of the package relies on.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np
import scipy.linalg as sla
from scipy.linalg import lapack

from .errors import InputError, NumericalError, SingularMatrixError

MAX_QL_SWEEPS = 50


class SymTridiag(NamedTuple):
    """Symmetric tridiagonal matrix: ``diag`` (length N), ``offdiag`` (N-1)."""

    diag: np.ndarray
    offdiag: np.ndarray

    @classmethod
    def hermite_jacobi(cls, size):
        """Jacobi matrix whose eigenvalues are the zeros of H_size."""
        m = np.arange(1, size)
        return cls(np.zeros(size), np.sqrt(m / 2.0))


def tridiag_eigenvalues(t: SymTridiag) -> np.ndarray:
    """All eigenvalues of a symmetric tridiagonal matrix, ascending.

    Implicit-shift QL with Wilkinson shifts (the classic ``tqli`` scheme).
    Raises ``NumericalError`` if any eigenvalue needs more than 50 sweeps.
    """
    d = [float(v) for v in t.diag]
    n = len(d)
    if n == 0:
        raise InputError("tridiagonal matrix must have size >= 1")
    if len(t.offdiag) != n - 1:
        raise InputError("off-diagonal length must be size - 1")
    e = [float(v) for v in t.offdiag] + [0.0]
    eps = np.finfo(float).eps

    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > MAX_QL_SWEEPS:
                raise NumericalError(
                    f"QL iteration did not converge for eigenvalue {l} "
                    f"after {MAX_QL_SWEEPS} sweeps")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.sort(np.array(d))


class LUSolveResult(NamedTuple):
    x: np.ndarray
    cond: float


def lu_solve(a, b) -> LUSolveResult:
    """Solve ``a @ x = b`` by LU with partial pivoting.

    Also returns a one-norm condition estimate (LAPACK ``gecon``).
    Raises ``SingularMatrixError`` on an exactly zero pivot.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"lu_solve needs a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InputError("matrix has non-finite entries")
    lu, piv, info = lapack.dgetrf(a)
    if info > 0:
        raise SingularMatrixError(f"exact zero pivot at position {info - 1}")
    if info < 0:
        raise NumericalError(f"dgetrf argument error {info}")
    x, info = lapack.dgetrs(lu, piv, b)
    if info != 0:
        raise NumericalError(f"dgetrs failed with info={info}")
    anorm = np.linalg.norm(a, 1)
    rcond, info = lapack.dgecon(lu, anorm, norm="1")
    cond = math.inf if rcond == 0.0 else 1.0 / rcond
    return LUSolveResult(x, cond)


def dense_eigenvalues(a, max_size=200) -> np.ndarray:
    """Eigenvalues of a general real matrix (Hessenberg + shifted QR).

    Returned as a complex array sorted by (real, imag).
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"dense_eigenvalues needs a square matrix, got {a.shape}")
    if a.shape[0] > max_size:
        raise InputError(f"matrix size {a.shape[0]} exceeds limit {max_size}")
    try:
        w = sla.eigvals(a, check_finite=True)
    except sla.LinAlgError as exc:
        raise NumericalError(f"QR eigenvalue iteration failed: {exc}") from exc
    return np.sort_complex(w.astype(complex))


class LstsqResult(NamedTuple):
    x: np.ndarray
    residual: float
    rank: int


def lstsq(a, b, rtol=1e-12) -> LstsqResult:
    """Least squares via Householder QR with column pivoting.

    Numerical rank counts diagonal entries of R above ``rtol`` times the
    largest. Rank-deficient systems get a basic solution on the leading
    columns; the caller decides whether that is acceptable.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    rows, cols = a.shape
    if rows < cols:
        raise InputError(f"lstsq needs rows >= cols, got {a.shape}")
    q, r, perm = sla.qr(a, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    rank = int(np.sum(diag > rtol * diag[0])) if diag.size and diag[0] > 0 else 0
    x = np.zeros(cols)
    if rank:
        qtb = q[:, :rank].T @ b
        x[perm[:rank]] = sla.solve_triangular(r[:rank, :rank], qtb)
    residual = float(np.linalg.norm(a @ x - b))
    return LstsqResult(x, residual, rank)
