"""Dense symmetric eigensolver used as numerical ground truth.

Cyclic Jacobi rotations, compiled with numba.  Rotations are accumulated, so
eigenvectors come for free and every spectrum carries its residual.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numba
import numpy as np

from .graph import Graph, laplacian

SWEEP_LIMIT = 100
OFF_TOL = 1e-12
RESIDUAL_TOL = 1e-8
INTEGER_TOL = 1e-6
FIEDLER_TOL = 1e-7


class JacobiError(ArithmeticError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    vectors: np.ndarray | None = None
    residual: float = 0.0
    sweeps: int = 0

    @property
    def n(self) -> int:
        return len(self.values)

    def integer_groups(self, tol: float = INTEGER_TOL) -> dict[int, int]:
        return integer_eigenvalues(self, tol)

    def to_json(self, tol: float = INTEGER_TOL) -> dict[str, Any]:
        groups = self.integer_groups(tol)
        return {
            "values": [float(v) for v in self.values],
            "algebraic_connectivity": float(self.values[-2]) if self.n >= 2 else None,
            "integer_groups": [{"value": k, "multiplicity": c} for k, c in groups.items()],
            "residual": f"{self.residual:.3e}",
        }


@numba.njit(cache=True)
def _off_norm(A: np.ndarray) -> float:
    n = A.shape[0]
    total = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                total += A[i, j] * A[i, j]
    return np.sqrt(total)


@numba.njit(cache=True)
def _sweep(A: np.ndarray, W: np.ndarray, late: bool) -> None:
    # One cyclic row-by-row sweep.  A stays symmetric: rows p, q are updated
    # contiguously and mirrored into the columns.  W holds eigenvectors as rows.
    n = A.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = A[p, q]
            if apq == 0.0:
                continue
            app = A[p, p]
            aqq = A[q, q]
            g = 100.0 * abs(apq)
            if late and abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq):
                A[p, q] = 0.0
                A[q, p] = 0.0
                continue
            tau = (aqq - app) / (2.0 * apq)
            sign = 1.0 if tau >= 0.0 else -1.0
            t = sign / (abs(tau) + np.sqrt(1.0 + tau * tau))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            A[p, p] = app - t * apq
            A[q, q] = aqq + t * apq
            A[p, q] = 0.0
            A[q, p] = 0.0
            for k in range(n):
                if k == p or k == q:
                    continue
                akp = A[p, k]
                akq = A[q, k]
                newp = c * akp - s * akq
                newq = s * akp + c * akq
                A[p, k] = newp
                A[k, p] = newp
                A[q, k] = newq
                A[k, q] = newq
            for k in range(n):
                wp = W[p, k]
                wq = W[q, k]
                W[p, k] = c * wp - s * wq
                W[q, k] = s * wp + c * wq


def jacobi_eigh(
    M: np.ndarray, off_tol: float = OFF_TOL, max_sweeps: int = SWEEP_LIMIT
) -> tuple[np.ndarray, np.ndarray, int]:
    """Eigenvalues (unsorted) and eigenvector columns of a symmetric matrix.

    Stops once the off-diagonal Frobenius norm is at most ``off_tol * ||M||_F``.
    """
    M = np.asarray(M, dtype=np.float64)
    n = M.shape[0]
    if M.shape != (n, n) or not np.array_equal(M, M.T):
        raise ValueError("jacobi_eigh needs a square symmetric matrix")
    # Padded row stride: power-of-two strides alias in cache on the column writes.
    A = np.zeros((n, n + 8))[:, :n]
    A[:] = M
    W = np.eye(n)
    target = off_tol * float(np.linalg.norm(M))
    sweeps = 0
    while n > 1 and _off_norm(A) > target:
        if sweeps == max_sweeps:
            raise JacobiError(f"Jacobi did not converge in {max_sweeps} sweeps", _off_norm(A))
        _sweep(A, W, sweeps >= 3)
        sweeps += 1
    return np.diag(A).copy(), W.T.copy(), sweeps


def residual(L: np.ndarray, values: np.ndarray, vectors: np.ndarray) -> float:
    """``max_i ||L v_i - lambda_i v_i||_inf``."""
    if len(values) == 0:
        return 0.0
    R = L @ vectors - vectors * values[None, :]
    return float(np.max(np.abs(R)))


def eigenvalues(L: np.ndarray) -> Spectrum:
    """Full spectrum of a Laplacian, sorted descending, with eigenvectors."""
    Lf = np.asarray(L, dtype=np.float64)
    vals, vecs, sweeps = jacobi_eigh(Lf)
    order = np.argsort(-vals, kind="stable")
    vals, vecs = vals[order], vecs[:, order]
    res = residual(Lf, vals, vecs)
    bound = RESIDUAL_TOL * max(1.0, float(np.max(np.sum(np.abs(Lf), axis=1), initial=0.0)))
    if res > bound:
        raise JacobiError(f"eigenpair residual exceeds {bound:.3e}", res)
    return Spectrum(tuple(float(v) for v in vals), vecs, res, sweeps)


def graph_spectrum(g: Graph) -> Spectrum:
    return eigenvalues(laplacian(g))


def algebraic_connectivity(s: Spectrum) -> float:
    if s.n < 2:
        raise ValueError("algebraic connectivity is undefined for fewer than 2 vertices")
    return s.values[-2]


def integer_eigenvalues(s: Spectrum, tol: float = INTEGER_TOL) -> dict[int, int]:
    """Eigenvalues within ``tol`` of an integer, grouped by that integer."""
    groups: dict[int, int] = {}
    for v in s.values:
        k = round(v)
        if abs(v - k) <= tol:
            groups[k] = groups.get(k, 0) + 1
    return dict(sorted(groups.items()))


def fiedler_check(g: Graph, s: Spectrum, kappa: int, tol: float = FIEDLER_TOL) -> bool:
    """``a(G) <= kappa(G)`` for a connected non-complete graph."""
    return algebraic_connectivity(s) <= kappa + tol
