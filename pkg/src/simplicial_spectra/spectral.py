"""Dominant eigenpairs of the signless Laplacians."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boundary import FaceVector, LabeledSparseMatrix, q_up
from .complex import Complex, ComplexError

SNAP_TOL = 1e-6


@dataclass(frozen=True)
class SpectralResult:
    value: float
    vector: FaceVector
    residual: float
    iterations: int
    converged: bool

    @property
    def snapped(self) -> int | None:
        """Nearest integer when the value is within 1e-6 of it."""
        return integer_snap(self.value)


def integer_snap(x: float, tol: float = SNAP_TOL) -> int | None:
    k = round(x)
    return int(k) if abs(x - k) < tol else None


def _dense_symmetric(M: LabeledSparseMatrix) -> np.ndarray:
    a = M.toarray(dtype=float)
    if M.row_labels != M.col_labels or not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    return a


def spectral_radius(
    M: LabeledSparseMatrix, tol: float = 1e-10, max_iter: int = 100_000
) -> SpectralResult:
    """Power iteration from the all-ones vector.

    ``M`` must be symmetric, nonnegative and positive semidefinite. Stops once
    ||Mx - lam x|| <= tol * max(1, lam) with lam the Rayleigh quotient of the
    unit iterate x. On hitting ``max_iter`` the best estimate is returned with
    ``converged=False``.
    """
    a = _dense_symmetric(M)
    size = a.shape[0]
    if size == 0:
        return SpectralResult(0.0, FaceVector((), np.zeros(0)), 0.0, 0, True)
    x = np.full(size, 1.0 / np.sqrt(size))
    lam, res = 0.0, np.inf
    for it in range(1, max_iter + 1):
        y = a @ x
        lam = float(x @ y)
        res = float(np.linalg.norm(y - lam * x))
        if res <= tol * max(1.0, lam):
            return SpectralResult(lam, FaceVector(M.row_labels, x), res, it, True)
        norm = np.linalg.norm(y)
        if norm == 0.0:
            break
        x = y / norm
    return SpectralResult(lam, FaceVector(M.row_labels, x), res, max_iter, False)


def q_spectral_radius(
    K: Complex, i: int, tol: float = 1e-10, max_iter: int = 100_000
) -> SpectralResult:
    return spectral_radius(q_up(K, i), tol=tol, max_iter=max_iter)


def tented_spectral_radius_exact(n: int, r: int) -> int:
    """Closed form rn - r^2 + 1 for the tented complex."""
    if r < 1 or n <= r:
        raise ComplexError(f"tented complex needs n > r >= 1, got n={n}, r={r}")
    return r * n - r * r + 1


def numeric_nullity(M: LabeledSparseMatrix, tol: float = 1e-8) -> int:
    a = _dense_symmetric(M)
    if a.size == 0:
        return 0
    return int(np.sum(np.linalg.eigvalsh(a) < tol))
