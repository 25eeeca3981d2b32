"""Dense symmetric eigenvalue solver.

Two stage scheme: Householder similarity transformations reduce the
matrix to tridiagonal form, then an implicit-shift QL iteration drives
the off-diagonal entries to zero. Only eigenvalues are computed; the
orthogonal factors are never accumulated, which is all the entropy
computations need and halves the work.
"""

from __future__ import annotations

import math
import sys

import numpy as np

from .errors import ConvergenceError

__all__ = ["symmetric_eigenvalues", "count_zero_eigenvalues"]

_EPS = sys.float_info.epsilon


def _householder_tridiagonalize(a: np.ndarray) -> tuple[list[float], list[float]]:
    """Reduce symmetric ``a`` (destroyed) to tridiagonal (d, e).

    ``e[i]`` is the coupling between positions i and i+1; ``e[n-1]`` is 0.
    """
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1:, k]
        norm = math.sqrt(float(x @ x))
        if norm == 0.0:
            continue
        alpha = -math.copysign(norm, x[0] if x[0] != 0.0 else 1.0)
        v = x.copy()
        v[0] -= alpha
        vnorm = math.sqrt(float(v @ v))
        if vnorm == 0.0:
            continue
        v /= vnorm
        # B <- (I - 2vv^T) B (I - 2vv^T) applied to the trailing block
        block = a[k + 1:, k + 1:]
        p = block @ v
        kappa = float(v @ p)
        q = p - kappa * v
        block -= 2.0 * np.outer(v, q)
        block -= 2.0 * np.outer(q, v)
        a[k + 1, k] = alpha
        a[k, k + 1] = alpha
    d = [float(a[i, i]) for i in range(n)]
    e = [float(a[i + 1, i]) for i in range(n - 1)] + [0.0]
    return d, e


def _ql_implicit_shift(d: list[float], e: list[float], max_sweeps: int) -> list[float]:
    """Eigenvalues of the symmetric tridiagonal (d, e) by QL with implicit shifts."""
    n = len(d)
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > max_sweeps:
                raise ConvergenceError(
                    f"QL iteration exceeded {max_sweeps} sweeps at eigenvalue index {l}")
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
                    # negligible rotation: deflate and restart this eigenvalue
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
    return d


def symmetric_eigenvalues(matrix: np.ndarray, max_sweeps: int = 30) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, ascending.

    Raises ``ValueError`` for non-square or non-symmetric input and
    ``ConvergenceError`` if some eigenvalue fails to converge within
    ``max_sweeps`` QL sweeps.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        return np.empty(0)
    if not np.allclose(a, a.T, rtol=1e-10, atol=1e-12):
        raise ValueError("matrix is not symmetric")
    if n == 1:
        return a[0, :1].copy()
    d, e = _householder_tridiagonalize(a.copy())
    eigenvalues = _ql_implicit_shift(d, e, max_sweeps)
    return np.sort(np.asarray(eigenvalues))


def count_zero_eigenvalues(eigenvalues: np.ndarray, tol: float = 1e-8) -> int:
    """Number of eigenvalues that are zero within ``tol``."""
    return int(np.count_nonzero(np.abs(np.asarray(eigenvalues)) < tol))
