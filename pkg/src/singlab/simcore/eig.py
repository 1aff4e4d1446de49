"""Dense and banded eigenvalue extraction with residual checks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg


@dataclass(frozen=True)
class Banded:
    """Band storage: ``bands[i, j]`` is entry (i + j - upper, j) of the matrix.

    Same layout as LAPACK general band storage with ``upper`` superdiagonals
    and ``lower`` subdiagonals.
    """

    bands: np.ndarray
    upper: int
    lower: int

    def to_dense(self) -> np.ndarray:
        bands = np.asarray(self.bands, dtype=float)
        n = bands.shape[1]
        a = np.zeros((n, n))
        for r in range(bands.shape[0]):
            off = self.upper - r
            for j in range(n):
                i = j - off
                if 0 <= i < n:
                    a[i, j] = bands[r, j]
        return a


@dataclass
class EigResult:
    values: np.ndarray
    vectors: np.ndarray
    residual: float


def eig_banded(matrix, k: int | None = None, mass=None, tol: float = 1e-8) -> EigResult:
    """Eigenpairs of a square matrix, sorted by descending real part.

    ``matrix`` may be a dense array or a :class:`Banded`.  With ``mass``
    the generalized problem ``A v = nu M v`` is solved, which admits
    constraint rows (zero rows of ``M``).  ``k`` keeps only the leading
    ``k`` pairs after sorting; infinite eigenvalues of the generalized
    problem are dropped first.  Every returned pair is verified to satisfy
    its equation to ``tol`` relative residual.
    """
    a = matrix.to_dense() if isinstance(matrix, Banded) else np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    scale = max(np.abs(a).max(), 1.0)
    if mass is None:
        vals, vecs = linalg.eig(a)
    else:
        m = np.asarray(mass, dtype=float)
        if m.shape != a.shape:
            raise ValueError("mass matrix shape mismatch")
        vals, vecs = _qz_eig(a, m)
    order = np.argsort(-vals.real, kind="stable")
    vals, vecs = vals[order], vecs[:, order]
    if k is not None:
        vals, vecs = vals[:k], vecs[:, :k]
    worst = 0.0
    m = np.eye(a.shape[0]) if mass is None else np.asarray(mass, dtype=float)
    for i in range(len(vals)):
        v = vecs[:, i]
        r = np.linalg.norm(a @ v - vals[i] * (m @ v)) / (scale * np.linalg.norm(v))
        worst = max(worst, r)
    if worst > tol:
        raise ArithmeticError(f"eigen residual {worst:.3e} exceeds {tol:.1e}")
    return EigResult(values=vals, vectors=vecs, residual=worst)


def _qz_eig(a: np.ndarray, m: np.ndarray):
    """Finite eigenpairs of A v = nu M v, dropping infinite pencils."""
    alpha, beta, vecs = linalg.eig(a, m, homogeneous_eigvals=True)
    finite = np.abs(beta[0]) > 1e-12 * max(np.abs(alpha[0]).max(), 1.0)
    vals = np.full(alpha.shape[1], np.inf + 0j)
    vals[finite] = alpha[0, finite] / beta[0, finite]
    return vals[finite], vecs[:, finite]
