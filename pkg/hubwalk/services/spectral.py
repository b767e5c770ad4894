"""
hubwalk — Spectral Kernel
==========================
Dense symmetric eigendecomposition and the quantities derived from it:

  - sym_eig                     eigenpairs of a real symmetric matrix
  - group_degenerate            chain equal eigenvalues into energy groups
  - exp_diag                    diagonal of exp(H) from the eigenpairs
  - time_average_quadrature     trapezoid time-average of a unitary walk,
                                the numerical oracle for the closed form
  - time_average_until_stable   same, growing T until the average settles

All functions are pure; eigenvalues are in nondecreasing order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import scipy.linalg

from hubwalk.errors import (
    ConvergenceError,
    EigenSolverError,
    InvalidStateError,
    NonSymmetricMatrixError,
    SpectralOverflowError,
)
from hubwalk.utils.logger import setup_logger

logger = setup_logger("Spectral")

SYMMETRY_TOL = 1e-12
UNIT_NORM_TOL = 1e-10
# Largest exponent whose exp() is still a finite double.
_EXP_LIMIT = math.log(np.finfo(float).max)
_TIME_CHUNK = 4096
# Complex entries allowed in one (samples × dim) phase block.
_TIME_BLOCK_ENTRIES = 1 << 22


def time_chunk(dim: int) -> int:
    """Samples per quadrature block; samples × dim stays within a fixed entry budget."""
    return max(1, min(_TIME_CHUNK, _TIME_BLOCK_ENTRIES // max(dim, 1)))


@dataclass(frozen=True)
class SymmetricEigendecomposition:
    dim: int
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        phi = self.eigenvectors
        return (phi * self.eigenvalues) @ phi.T


@dataclass(frozen=True)
class EigenvalueGroups:
    """Partition of the 0-based eigen-indices into degenerate-energy groups."""

    groups: Tuple[Tuple[int, ...], ...]
    tolerance: float

    def __len__(self) -> int:
        return len(self.groups)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(g) for g in self.groups)

    @property
    def all_singletons(self) -> bool:
        return all(len(g) == 1 for g in self.groups)


def _as_matrix(H) -> np.ndarray:
    # Hamiltonian objects carry their matrix; plain arrays pass through.
    return np.asarray(getattr(H, "matrix", H), dtype=float)


def sym_eig(H) -> SymmetricEigendecomposition:
    """Eigendecomposition H = Φ diag(θ) Φᵀ of a real symmetric matrix."""
    matrix = _as_matrix(H)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise NonSymmetricMatrixError(f"expected a square matrix, got shape {matrix.shape}")
    asym = float(np.max(np.abs(matrix - matrix.T))) if matrix.size else 0.0
    if asym > SYMMETRY_TOL:
        raise NonSymmetricMatrixError(f"matrix is not symmetric (max |H - Hᵀ| = {asym:.3e})")
    sym = 0.5 * (matrix + matrix.T)
    try:
        theta, phi = scipy.linalg.eigh(sym, check_finite=True)
    except (scipy.linalg.LinAlgError, ValueError) as e:
        raise EigenSolverError(f"symmetric eigensolver failed: {e}") from e
    logger.debug("sym_eig: dim=%d, spectrum [%.6g, %.6g]", sym.shape[0], theta[0], theta[-1])
    return SymmetricEigendecomposition(dim=sym.shape[0], eigenvalues=theta, eigenvectors=phi)


def group_degenerate(eig: SymmetricEigendecomposition, rel_tol: float = 1e-8) -> EigenvalueGroups:
    """Chain sorted eigenvalues whose consecutive gap is within rel_tol·max(1, max|θ|)."""
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    theta = np.asarray(eig.eigenvalues, dtype=float)
    if theta.size == 0:
        return EigenvalueGroups(groups=(), tolerance=0.0)
    order = np.argsort(theta, kind="stable")
    ordered = theta[order]
    tolerance = rel_tol * max(1.0, float(np.max(np.abs(ordered))))
    breaks = np.flatnonzero(np.diff(ordered) > tolerance) + 1
    groups = tuple(tuple(int(i) for i in chunk) for chunk in np.split(order, breaks))
    return EigenvalueGroups(groups=groups, tolerance=tolerance)


def exp_diag(eig: SymmetricEigendecomposition) -> np.ndarray:
    """Diagonal of exp(H): d[m] = Σ_k e^{θ_k} Φ[m,k]²."""
    theta = np.asarray(eig.eigenvalues, dtype=float)
    top = float(np.max(theta)) if theta.size else 0.0
    if top >= _EXP_LIMIT:
        raise SpectralOverflowError(f"exp({top:.6g}) overflows double precision")
    try:
        with np.errstate(over="raise"):
            return (eig.eigenvectors ** 2) @ np.exp(theta)
    except FloatingPointError as e:
        raise SpectralOverflowError(f"exp(H) diagonal overflows (max eigenvalue {top:.6g})") from e


def _check_unit(psi0: np.ndarray) -> None:
    norm = float(np.linalg.norm(psi0))
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        raise InvalidStateError(f"initial state must have unit norm, got {norm:.12g}")


def time_average_quadrature(H, psi0, T: float, steps: int) -> np.ndarray:
    """(1/T)∫₀ᵀ |⟨m|e^{-iHt}ψ₀⟩|² dt by the composite trapezoid rule.

    `steps` uniform intervals (steps + 1 samples). The evolved state at each
    sample is Φ (e^{-iθt} ⊙ Φᵀψ₀).
    """
    psi = np.asarray(getattr(psi0, "amplitudes", psi0))
    _check_unit(psi)
    if T <= 0:
        raise ValueError("time horizon T must be positive")
    if steps < 1:
        raise ValueError("steps must be a positive integer")
    eig = sym_eig(H)
    if psi.shape != (eig.dim,):
        raise InvalidStateError(f"state has length {psi.shape}, Hamiltonian has dim {eig.dim}")
    phi = eig.eigenvectors
    theta = eig.eigenvalues
    coeffs = phi.T @ psi
    dt = T / steps
    total = np.zeros(eig.dim, dtype=float)
    chunk = time_chunk(eig.dim)
    for start in range(0, steps + 1, chunk):
        idx = np.arange(start, min(start + chunk, steps + 1))
        t = idx * dt
        weights = np.full(idx.shape, dt)
        weights[idx == 0] = 0.5 * dt
        weights[idx == steps] = 0.5 * dt
        phases = np.exp(-1j * np.outer(t, theta))
        amplitudes = (phases * coeffs) @ phi.T
        total += weights @ (amplitudes.real ** 2 + amplitudes.imag ** 2)
    return total / T


def time_average_until_stable(
    H,
    psi0,
    tol: float = 1e-4,
    t_start: float = 100.0,
    growth: float = 2.0,
    samples_per_unit: float = 100.0,
    t_max: float = 1e5,
) -> Tuple[np.ndarray, float]:
    """Grow T geometrically until successive time averages differ by at most tol (max-norm).

    Returns the last average and the horizon it was taken over.
    """
    if growth <= 1:
        raise ValueError("growth factor must exceed 1")
    T = float(t_start)
    previous = time_average_quadrature(H, psi0, T, max(1, math.ceil(samples_per_unit * T)))
    while True:
        T_next = T * growth
        if T_next > t_max:
            raise ConvergenceError(
                f"time average did not settle to {tol:g} before T={t_max:g}", iterations=int(T)
            )
        current = time_average_quadrature(H, psi0, T_next, max(1, math.ceil(samples_per_unit * T_next)))
        change = float(np.max(np.abs(current - previous)))
        logger.debug("time average T=%g change=%.3e", T_next, change)
        if change <= tol:
            return current, T_next
        previous, T = current, T_next
